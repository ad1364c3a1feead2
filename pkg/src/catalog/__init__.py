from src.catalog.entry import CatalogEntry, ParameterAssignment, ParameterSpec
from src.catalog.errors import (CatalogError, InadmissibleAssignment,
                                ManifestMismatch, SchemaError, UnboundParameter)
from src.catalog.instances import enumerate_small, expected_invariants, instantiate
from src.catalog.loader import Catalog, load_catalog
