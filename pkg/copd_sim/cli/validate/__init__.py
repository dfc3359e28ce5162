"""COPD Simulator Module"""
