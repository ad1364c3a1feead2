"""
Entries every catalog carries: Redei's minimal non-abelian groups, cyclic
groups and the dihedral 2-groups. Entries refer to them by id inside
product blocks (``{"ref": "Mpnm", "params": {"n": "n+1", "m": "m"}}``).
"""
from src.catalog.entry import CatalogEntry

BUILTIN_ENTRIES = [
    {
        "id": "Q8",
        "block": "A1",
        "source": "Redei list",
        "level": 1,
        "primes": "p == 2",
        "order": "8",
        "presentation": {
            "generators": [
                {"name": "b", "order": "2", "power": "a^2"},
                {"name": "a", "order": "4"},
            ],
            "relations": ["a^b=a^-1"],
            "defining": ["a^4=1", "b^2=a^2"],
        },
        "claims": {"alpha1": 1, "d": 2, "c": 2, "derived_order": "p", "exponent": 4},
    },
    {
        "id": "Mpnm",
        "block": "A1",
        "source": "Redei list, M_p(n,m)",
        "level": 1,
        "parameters": [{"name": "n", "min": 2}, {"name": "m"}],
        "order": "p^(n+m)",
        "presentation": {
            "generators": [
                {"name": "b", "order": "p^m"},
                {"name": "a", "order": "p^n"},
            ],
            "relations": ["a^b=a^(1+p^(n-1))"],
        },
        "claims": {"alpha1": 1, "d": 2, "derived_order": "p", "metacyclic": True},
    },
    {
        "id": "Mpnm1",
        "block": "A1",
        "source": "Redei list, M_p(n,m,1)",
        "level": 1,
        "parameters": [{"name": "n"}, {"name": "m"}],
        "constraints": ["n >= m", "p > 2 or n + m >= 3"],
        "order": "p^(n+m+1)",
        "presentation": {
            "generators": [
                {"name": "b", "order": "p^m"},
                {"name": "a", "order": "p^n"},
                {"name": "c", "order": "p"},
            ],
            "relations": ["[a,b]=c"],
            "defining": ["[c,a]=[c,b]=1"],
        },
        "claims": {"alpha1": 1, "d": 2, "derived_order": "p", "metacyclic": False},
    },
    {
        "id": "C",
        "block": "builtin",
        "source": "cyclic group C_(p^n)",
        "level": 0,
        "parameters": [{"name": "n"}],
        "order": "p^n",
        "presentation": {"generators": [{"name": "a", "order": "p^n"}]},
        "claims": {"alpha1": 0},
    },
    {
        "id": "D",
        "block": "builtin",
        "source": "dihedral group D_(2^n)",
        "level": "n-2",
        "primes": "p == 2",
        "parameters": [{"name": "n", "min": 3}],
        "order": "2^n",
        "presentation": {
            "generators": [
                {"name": "s", "order": "2"},
                {"name": "r", "order": "2^(n-1)"},
            ],
            "relations": ["r^s=r^-1"],
            "defining": ["s^2=1"],
        },
        "claims": {"d": 2, "c": "n-1"},
    },
]

BUILTIN_IDS = tuple(data["id"] for data in BUILTIN_ENTRIES)


def builtin_entries():
    return [CatalogEntry.from_dict(data) for data in BUILTIN_ENTRIES]
