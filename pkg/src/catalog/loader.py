"""
Loading the catalog: JSON entry files checked against a manifest of ids and
per-block counts.
"""
import json
from fnmatch import fnmatch
from functools import lru_cache
from pathlib import Path

from src.catalog.builtins import BUILTIN_IDS, builtin_entries
from src.catalog.entry import CLAIM_NAMES, CatalogEntry
from src.catalog.errors import CatalogError, ManifestMismatch, SchemaError
from src.fp import FAMILY_PARAMETERS
from src.fp.errors import FieldError
from src.pcgroup.errors import PresentationError
from src.pcgroup.template import PresentationTemplate
from src.utils.configs import get_catalog_dir
from src.utils.logger import log

MANIFEST_NAME = "manifest.json"
REQUIRED_FIELDS = ("id", "block", "level", "order", "presentation")


class Catalog:
    """Immutable after loading; templates are built on first use."""

    def __init__(self, entries, manifest=None):
        self.entries = []
        self.by_id = {}
        self.manifest = manifest or {}
        self._templates = {}
        self._building = set()
        for entry in entries:
            if entry.id in self.by_id:
                raise SchemaError(entry.id, "id", "duplicate id")
            self.by_id[entry.id] = entry
            self.entries.append(entry)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, entry_id):
        return entry_id in self.by_id

    def get(self, entry_id):
        if entry_id not in self.by_id:
            raise CatalogError(f"no catalog entry '{entry_id}'")
        return self.by_id[entry_id]

    def select(self, pattern=None, level=None, include_builtins=False):
        """Entries whose id matches the glob ``pattern``, in catalog order."""
        chosen = []
        for entry in self.entries:
            if not include_builtins and entry.id in BUILTIN_IDS:
                continue
            if pattern and not any(fnmatch(entry.id, part) for part in pattern.split(",")):
                continue
            if level is not None and entry.level != level:
                continue
            chosen.append(entry)
        return chosen

    def template(self, entry):
        if isinstance(entry, str):
            entry = self.get(entry)
        if entry.id not in self._templates:
            self._templates[entry.id] = self._build_template(entry, entry.presentation)
        entry.template = self._templates[entry.id]
        return entry.template

    def product_template(self, entry):
        """Template of the entry's product-form description, or None."""
        if entry.product_form is None:
            return None
        return self._build_template(entry, {"product": entry.product_form})

    def _build_template(self, entry, presentation):
        if entry.id in self._building:
            raise SchemaError(entry.id, "presentation", "product refers back to itself")
        self._building.add(entry.id)
        try:
            return PresentationTemplate.from_dict(
                presentation, resolve=self.template, parameters=entry.parameter_names,
                constraints=entry.all_constraints, residues=entry.residues())
        except (PresentationError, CatalogError) as e:
            raise SchemaError(entry.id, "presentation", str(e))
        finally:
            self._building.discard(entry.id)


def _read_entries(path):
    text = Path(path).read_text()
    if not text.strip():
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(Path(path).name, "json", f"line {e.lineno}: {e.msg}")
    entries = data.get("entries", []) if isinstance(data, dict) else data
    if not isinstance(entries, list):
        raise SchemaError(Path(path).name, "entries", "expected a list of entries")
    return entries


def _check_equivalence(entry_id, equivalence, parameter_names):
    family = equivalence.get("family")
    if family not in FAMILY_PARAMETERS:
        raise SchemaError(entry_id, "equivalence", f"unknown family {family!r}")
    params = equivalence.get("params")
    if params is not None and sorted(params) != sorted(FAMILY_PARAMETERS[family]):
        raise SchemaError(entry_id, "equivalence.params",
                          f"{family} takes {FAMILY_PARAMETERS[family]}, got {sorted(params)}")
    if params is None:
        unbound = sorted(set(FAMILY_PARAMETERS[family]) - set(parameter_names))
        if unbound:
            raise SchemaError(entry_id, "equivalence", f"{family} reads undeclared parameters {unbound}")


def _parse_entry(raw, where):
    if not isinstance(raw, dict):
        raise SchemaError(where, "entry", "expected an object")
    entry_id = raw.get("id", where)
    for name in REQUIRED_FIELDS:
        if name not in raw:
            raise SchemaError(entry_id, name, "missing")
    try:
        entry = CatalogEntry.from_dict(raw)
    except (KeyError, TypeError, ValueError, FieldError) as e:
        raise SchemaError(entry_id, "entry", str(e))
    unknown = sorted(set(entry.claims) - set(CLAIM_NAMES))
    if unknown:
        raise SchemaError(entry_id, "claims", f"unknown claims {unknown}")
    if entry.equivalence is not None:
        _check_equivalence(entry_id, entry.equivalence, entry.parameter_names)
    missing = entry.unbound_names()
    if missing:
        field, name = missing[0]
        raise SchemaError(entry_id, field, f"unbound name '{name}'")
    return entry


def _check_manifest(entries, manifest):
    blocks = manifest.get("blocks", {})
    expected = {entry_id: block for block, spec in blocks.items() for entry_id in spec.get("ids", [])}
    loaded = {entry.id: entry.block for entry in entries if entry.id not in BUILTIN_IDS}
    missing = sorted(set(expected) - set(loaded))
    extra = sorted(set(loaded) - set(expected))
    if missing or extra:
        raise ManifestMismatch(f"catalog ids differ from the manifest: missing {missing[:10]}, "
                               f"unexpected {extra[:10]}")
    for block, spec in blocks.items():
        ids = spec.get("ids", [])
        if "count" in spec and len(ids) != spec["count"]:
            raise ManifestMismatch(f"block {block}: manifest lists {len(ids)} ids, count is {spec['count']}")
        misplaced = [entry_id for entry_id in ids if loaded[entry_id] != block]
        if misplaced:
            raise ManifestMismatch(f"block {block}: entries {misplaced} carry another block")
    for name, total in manifest.get("totals", {}).items():
        counted = sum(blocks[block]["count"] for block in total["blocks"])
        if counted != total["count"]:
            raise ManifestMismatch(f"total '{name}' is {counted}, manifest says {total['count']}")


def _apply_block_claims(entries, manifest):
    for entry in entries:
        block_claims = manifest.get("blocks", {}).get(entry.block, {}).get("claims", {})
        if block_claims:
            entry.claims = {**block_claims, **entry.claims}


def load_manifest(path):
    path = Path(path)
    try:
        with open(path, "r") as f:
            return json.load(f)
    except FileNotFoundError:
        raise ManifestMismatch(f"no manifest at {path}")
    except json.JSONDecodeError as e:
        raise SchemaError(path.name, "json", f"line {e.lineno}: {e.msg}")


def load_catalog(path=None, manifest=None):
    """Load every entry file under ``path`` (a directory or one JSON file).

    ``manifest`` is a dict or a path; by default ``manifest.json`` next to the
    entries is used.
    """
    path = Path(path) if path is not None else get_catalog_dir()
    if path.is_dir():
        files = sorted(f for f in path.glob("*.json") if f.name != MANIFEST_NAME)
        manifest_path = path / MANIFEST_NAME
    else:
        files = [path]
        manifest_path = path.parent / MANIFEST_NAME
    if not isinstance(manifest, dict):
        manifest = load_manifest(manifest if manifest is not None else manifest_path)

    entries = []
    for file in files:
        for index, raw in enumerate(_read_entries(file)):
            entries.append(_parse_entry(raw, f"{file.name}#{index}"))
    _check_manifest(entries, manifest)
    _apply_block_claims(entries, manifest)
    catalog = Catalog(builtin_entries() + entries, manifest)
    for entry in catalog:
        catalog.template(entry)
        catalog.product_template(entry)
    log.info(f"Loaded catalog: {len(entries)} entries from {len(files)} files")
    return catalog


@lru_cache(maxsize=1)
def builtin_catalog():
    catalog = Catalog(builtin_entries())
    for entry in catalog:
        catalog.template(entry)
    return catalog
