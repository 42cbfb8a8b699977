"""harvestlab test suite."""
