import pytest
from click.testing import CliRunner
from hopfsage import create_app
from hopfsage.cli import cli
from hopfsage.models.field import Field
from hopfsage.services.fixture_service import FixtureService
from hopfsage.services.hopf_service import HopfService
from hopfsage.services.instance_service import InstanceService


@pytest.fixture(autouse=True)
def config():
    return create_app('hopfsage.config.TestConfig')


@pytest.fixture
def qq():
    return Field.rationals()


@pytest.fixture
def f2():
    return Field.prime(2)


@pytest.fixture
def kc2(qq):
    return HopfService.group_algebra(qq, HopfService.cyclic_table(2), 'KC2')


@pytest.fixture
def sw4(qq):
    return HopfService.sweedler_h4(qq)


def load_fixture_file(filename):
    return InstanceService.load_text(FixtureService.text(filename))


@pytest.fixture
def a4_instance():
    return load_fixture_file('a4.hm')


@pytest.fixture
def hh_instance():
    return load_fixture_file('hh.hm')


@pytest.fixture
def kc2f2_instance():
    return load_fixture_file('kc2f2.hm')


@pytest.fixture
def a4(a4_instance):
    return a4_instance.algebras['A4']


@pytest.fixture
def hh(hh_instance):
    return hh_instance.algebras['HH']


@pytest.fixture
def runner():
    """Invoke the command group under the test configuration."""
    cli_runner = CliRunner(mix_stderr=False)

    def invoke(*args):
        return cli_runner.invoke(
            cli, list(args), env={'HOPFSAGE_CONFIG':
                                  'hopfsage.config.TestConfig'})
    return invoke
