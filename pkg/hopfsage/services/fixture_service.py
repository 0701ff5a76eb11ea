import os
from importlib import resources
from typing import Dict, List, NamedTuple, Tuple
from hopfsage.models.instance import LoadedInstance
from hopfsage.services.instance_service import InstanceService
from hopfsage.utils.errors import SemanticError
from hopfsage.utils.logging import logger


class Fixture(NamedTuple):
    filename: str
    kind: str
    object: str
    description: str


FIXTURES: Dict[str, Fixture] = {
    'TRIV': Fixture('triv.hm', 'algebra', 'k', 'the ground field k over H = k'),
    'KC2': Fixture('kc2.hm', 'hopf', 'KC2', 'group algebra QC2'),
    'KC2F2': Fixture('kc2f2.hm', 'hopf', 'KC2F2', 'group algebra F2C2'),
    'HH': Fixture('hh.hm', 'algebra', 'HH', 'A = H = QC2, B = k'),
    'A4': Fixture('a4.hm', 'algebra', 'A4',
                  'Q[x]/(x^4) graded by C2, B = Q[t]/(t^2)'),
    'M2': Fixture('a4.hm', 'module', 'M2', 'A4/(x^2)'),
    'SW4': Fixture('sw4.hm', 'hopf', 'SW4', "Sweedler's Hopf algebra"),
    'HH2': Fixture('hh.hm', 'module', 'HH2', 'HH + HH over HH'),
}


class FixtureService:
    """Instance files shipped with the package."""

    @staticmethod
    def filenames() -> List[str]:
        return sorted({f.filename for f in FIXTURES.values()})

    @staticmethod
    def text(filename: str) -> str:
        if filename not in FixtureService.filenames():
            raise SemanticError(f"unknown fixture file '{filename}'")
        return resources.files('hopfsage.fixtures').joinpath(
            filename).read_text(encoding='utf-8')

    @staticmethod
    def fixture(name: str) -> Fixture:
        if name not in FIXTURES:
            raise SemanticError(
                f"unknown fixture '{name}'; expected one of "
                f"{', '.join(FIXTURES)}")
        return FIXTURES[name]

    @staticmethod
    def load(name: str) -> Tuple[LoadedInstance, Fixture]:
        fixture = FixtureService.fixture(name)
        return InstanceService.load_text(
            FixtureService.text(fixture.filename)), fixture

    @staticmethod
    def resolve(path: str) -> str:
        """Text of a file on disk, falling back to a shipped fixture file."""
        if os.path.exists(path):
            with open(path, encoding='utf-8') as handle:
                return handle.read()
        if os.path.basename(path) in FixtureService.filenames():
            logger.debug(f"'{path}' not found, using the shipped fixture")
            return FixtureService.text(os.path.basename(path))
        raise FileNotFoundError(f"no such instance file: '{path}'")
