"""Test suite package for forcing_lab."""
