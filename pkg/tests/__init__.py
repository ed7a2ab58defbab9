"""Total proper connection test suite."""
