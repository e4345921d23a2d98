"""
Tests for harbourne
"""
