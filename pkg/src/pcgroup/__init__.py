from src.pcgroup.base import FiniteGroup
from src.pcgroup.group import PcGroup
from src.pcgroup.presentation import ConsistencyStatus, PcPresentation
