"""Test suite for smartenv-reasoner"""
