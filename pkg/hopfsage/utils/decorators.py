import json
import sys
from functools import wraps
import click
from hopfsage.utils.error_handlers import error_payload


def handle_errors(f):
    """Decorator turning any raised error into a payload and exit status 2."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (click.exceptions.Exit, click.ClickException):
            raise
        except Exception as e:
            payload, code = error_payload(e)
            as_json = kwargs.get('as_json', False)
            if as_json:
                click.echo(json.dumps(payload, indent=2, sort_keys=True))
            else:
                click.echo(f"error: {payload['message']} ({payload['code']})",
                           err=True)
                for line in payload.get('diagnostics', []):
                    click.echo(f"  - {line}", err=True)
            sys.exit(code.value)
    return decorated_function
