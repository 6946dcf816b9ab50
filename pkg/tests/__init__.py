# Tests for hofflat
