import click
from hopfsage import create_app
from hopfsage.cli.certify import certify_projective, prop25, total_integral
from hopfsage.cli.decompose import decompose, prop43
from hopfsage.cli.structure import coinvariants, h_simple, is_field, validate
from hopfsage.cli.tools import export, fixtures, verify
from hopfsage.config import DevConfig


@click.group()
@click.option('--config', 'config_name', envvar='HOPFSAGE_CONFIG',
              default='hopfsage.config.Config', show_default=True,
              help='Configuration class to activate.')
@click.option('-v', '--verbose', is_flag=True, help='Log at debug level.')
def cli(config_name, verbose):
    """Exact certificates for relative Hopf modules."""
    create_app(DevConfig if verbose else config_name)


for command in (validate, coinvariants, h_simple, is_field,
                certify_projective, total_integral, prop25,
                decompose, prop43, verify, fixtures, export):
    cli.add_command(command)


def main():
    cli()
