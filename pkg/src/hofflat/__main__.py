"""Entry point for running hofflat as a module."""

from hofflat import main

if __name__ == "__main__":
    main()
