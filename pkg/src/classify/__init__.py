from src.classify.alpha import alpha1_bruteforce, alpha1_hall
from src.classify.at_index import (AtVerdict, MuTriple, at_index,
                                   at_index_literal, mu_triple)
from src.classify.errors import ClassificationInvariantError
from src.classify.fingerprint import Fingerprint, fingerprint
from src.classify.minimal import A1Type, a1_type, is_minimal_nonabelian
from src.structure.characteristic import is_abelian
