"""Output processing for typeb-fock results."""
