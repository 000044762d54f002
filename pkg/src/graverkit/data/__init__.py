"""Shipped witness tables and their checksum."""
