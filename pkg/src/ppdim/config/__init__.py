"""配置系统模块"""

from .value import value, ValueSpec, PropertyValueResolver, env_key
from .configuration import configuration, ConfigurationPropertiesBinder
from .settings import OracleSettings, VerifySettings, CliSettings, LoggingSettings

__all__ = [
    'value',
    'ValueSpec',
    'PropertyValueResolver',
    'env_key',
    'configuration',
    'ConfigurationPropertiesBinder',
    'OracleSettings',
    'VerifySettings',
    'CliSettings',
    'LoggingSettings'
]
