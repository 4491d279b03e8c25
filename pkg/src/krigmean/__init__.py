"""krigmean."""
