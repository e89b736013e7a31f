"""设置类注解与属性绑定"""

from typing import Any, Dict, Optional, Type, TypeVar

from .value import PropertyValueResolver, ValueSpec
from ..exceptions.ppdim_exceptions import ConfigurationException

C = TypeVar('C')


def configuration(prefix: str = ""):
    """
    设置类注解

    Args:
        prefix: 配置前缀，如 "ppdim.oracle"
    """

    def decorator(cls):
        cls.__ppdim_configuration__ = {'prefix': prefix}
        return cls

    return decorator


class ConfigurationPropertiesBinder:
    """配置属性绑定器"""

    def __init__(self, resolver: Optional[PropertyValueResolver] = None):
        self.resolver = resolver or PropertyValueResolver()

    def bind(self, config_class: Type[C], overrides: Optional[Dict[str, Any]] = None) -> C:
        """
        绑定配置属性到设置类的新实例

        Args:
            config_class: 使用 @configuration 标记的设置类
            overrides: 按属性名覆盖的值（命令行参数），值为 None 的项忽略

        Returns:
            设置类实例
        """
        config_info = getattr(config_class, '__ppdim_configuration__', None)
        if config_info is None:
            raise ConfigurationException(f"{config_class.__name__} is not a @configuration class")
        prefix = config_info['prefix']

        instance = config_class()
        for attr_name, spec in self.declared_values(config_class).items():
            full_expression = self._full_expression(prefix, spec.expression)
            resolved = self.resolver.resolve_value(full_expression, spec.default, spec.required)
            setattr(instance, attr_name, resolved)

        for attr_name, override in (overrides or {}).items():
            if override is None:
                continue
            if attr_name not in self.declared_values(config_class):
                raise ConfigurationException(f"Unknown setting '{attr_name}' for {config_class.__name__}",
                                             config_key=attr_name)
            setattr(instance, attr_name, override)

        return instance

    @staticmethod
    def declared_values(config_class: Type) -> Dict[str, ValueSpec]:
        """收集设置类上声明的配置值"""
        declared = {}
        for klass in reversed(config_class.__mro__):
            for attr_name, attr in vars(klass).items():
                if not attr_name.startswith('_') and isinstance(attr, ValueSpec):
                    declared[attr_name] = attr
        return declared

    @staticmethod
    def _full_expression(prefix: str, expression: str) -> str:
        if prefix and not expression.startswith('${'):
            return f"{prefix}.{expression}"
        return expression
