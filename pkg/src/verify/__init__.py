from src.verify.claims import COMPUTERS, compute_claim, judge
from src.verify.errors import UnknownClaim, VerificationError
from src.verify.harness import distinctness_scan, family_parameters, find_collisions, verify_all
from src.verify.verifier import skipped_report, verify_entry
