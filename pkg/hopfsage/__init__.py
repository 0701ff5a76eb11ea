from hopfsage.config import Config, activate
from hopfsage.utils.logging import setup_logger
import logging


def create_app(config_class=Config):
    """Activate a configuration class and configure logging."""
    if isinstance(config_class, str):
        module_name, _, class_name = config_class.rpartition('.')
        module = __import__(module_name, fromlist=[class_name])
        config_class = getattr(module, class_name)

    activate(config_class)
    setup_logger(
        name='hopfsage',
        log_file=getattr(config_class, 'LOG_FILE', None),
        level=getattr(config_class, 'LOG_LEVEL', logging.INFO)
    )
    return config_class
