"""Linear form bases root module."""
