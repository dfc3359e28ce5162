"""Test Module"""
