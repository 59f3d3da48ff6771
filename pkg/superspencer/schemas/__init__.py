"""Pydantic models for reports, expectations and errors."""
