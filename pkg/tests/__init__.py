"""Tests for graverkit."""
