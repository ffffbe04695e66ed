"""Utility modules for services."""
