"""harvestlab: harvest GraphQL traffic, derive schema oracles, replay and measure coverage."""
