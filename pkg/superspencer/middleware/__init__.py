"""Logging helpers for superspencer runs."""
