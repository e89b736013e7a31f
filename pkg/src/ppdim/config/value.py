"""配置值声明与属性解析"""

import json
import os
import re
from dataclasses import dataclass
from typing import Any, Optional

from ..exceptions.ppdim_exceptions import ConfigurationException

ENV_PREFIX = "PPDIM_"


@dataclass(frozen=True)
class ValueSpec:
    """配置值声明"""
    expression: str
    default: Any = None
    required: bool = True


def value(expression: str, default: Any = None, required: bool = True) -> ValueSpec:
    """
    声明一个绑定到配置属性的设置项

    Args:
        expression: 配置表达式，如 "max-depth" 或 "${ppdim.oracle.max-depth:4}"
        default: 默认值
        required: 是否必需
    """
    return ValueSpec(expression, default, required)


def env_key(key: str) -> str:
    """属性键对应的环境变量名：ppdim.oracle.max-depth -> PPDIM_ORACLE_MAX_DEPTH"""
    name = re.sub(r'[.\-]', '_', key).upper()
    return name if name.startswith(ENV_PREFIX) else ENV_PREFIX + name


class PropertyValueResolver:
    """属性值解析器"""

    def __init__(self, properties: Optional[dict] = None, environment: Optional[dict] = None):
        self.properties = dict(properties or {})
        self.environment = dict(os.environ if environment is None else environment)

    def resolve_value(self, expression: str, default: Any = None, required: bool = True) -> Any:
        """
        解析配置表达式

        支持的表达式:
        - "ppdim.oracle.max-depth" - 直接属性查找
        - "${ppdim.oracle.max-depth}" - 插值
        - "${ppdim.oracle.max-depth:4}" - 带默认值的插值
        """
        if not expression:
            return default

        if '${' in expression:
            return self._resolve_interpolation(expression, default, required)
        return self._resolve_direct_property(expression, default, required)

    def _resolve_interpolation(self, expression: str, default: Any, required: bool) -> Any:
        """解析插值表达式"""
        pattern = r'\$\{([^}]+)\}'
        matches = re.findall(pattern, expression)

        # 纯插值表达式直接返回解析后的值，保留类型
        if len(matches) == 1 and expression == '${' + matches[0] + '}':
            key, default_value = self._split_default(matches[0], default)
            return self._resolve_direct_property(key, default_value, required)

        result = expression
        for match in matches:
            key, default_value = self._split_default(match, default)
            actual_value = self._resolve_direct_property(key, default_value, False)
            result = result.replace('${' + match + '}', str(actual_value))

        return result

    def _split_default(self, match: str, default: Any):
        if ':' in match:
            key, default_value = match.split(':', 1)
            return key.strip(), self._convert_type(default_value)
        return match.strip(), default

    def _resolve_direct_property(self, key: str, default: Any, required: bool) -> Any:
        """解析直接属性：配置属性 > 环境变量 > 默认值"""
        if key in self.properties:
            found = self.properties[key]
            if isinstance(found, str):
                return self._convert_type(found)
            return found

        for candidate in (key, env_key(key)):
            env_value = self.environment.get(candidate)
            if env_value is not None:
                return self._convert_type(env_value)

        if required and default is None:
            raise ConfigurationException(f"Required configuration property '{key}' not found", config_key=key)

        return default

    def _convert_type(self, raw: str) -> Any:
        """类型转换"""
        text = raw.strip()

        if text.lower() in ('true', 'false'):
            return text.lower() == 'true'

        if text.isdigit() or (text.startswith('-') and text[1:].isdigit()):
            return int(text)

        if '.' in text and text.replace('.', '', 1).lstrip('-').isdigit():
            return float(text)

        if text.startswith(('{', '[')):
            try:
                return json.loads(text)
            except json.JSONDecodeError:
                pass

        # 逗号分隔的整数列表，如 "2,3,5"
        if ',' in text and all(part.strip().isdigit() for part in text.split(',')):
            return [int(part) for part in text.split(',')]

        return text

    def load_from_file(self, file_path: str):
        """从文件加载配置"""
        try:
            if file_path.endswith('.json'):
                self._load_json(file_path)
            elif file_path.endswith(('.yml', '.yaml')):
                self._load_yaml(file_path)
            elif file_path.endswith('.properties'):
                self._load_properties(file_path)
            else:
                raise ConfigurationException(f"Unsupported config file format: {file_path}")
        except OSError as e:
            raise ConfigurationException(f"Cannot read config file {file_path}", cause=e)

    def _load_json(self, file_path: str):
        """加载JSON配置文件"""
        with open(file_path, 'r', encoding='utf-8') as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as e:
                raise ConfigurationException(f"Malformed JSON config file {file_path}", cause=e)
            if isinstance(data, dict):
                self.properties.update(self._flatten_dict(data))

    def _load_yaml(self, file_path: str):
        """加载YAML配置文件"""
        try:
            import yaml
        except ImportError as e:
            raise ConfigurationException("PyYAML is required for YAML configuration support", cause=e)
        with open(file_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
            if isinstance(data, dict):
                self.properties.update(self._flatten_dict(data))

    def _load_properties(self, file_path: str):
        """加载Properties格式配置文件"""
        with open(file_path, 'r', encoding='utf-8') as f:
            for line in f:
                line = line.strip()
                if line and not line.startswith('#') and '=' in line:
                    key, raw = line.split('=', 1)
                    self.properties[key.strip()] = raw.strip()

    def _flatten_dict(self, data: dict, prefix: str = '') -> dict:
        """扁平化嵌套字典"""
        result = {}
        for key, item in data.items():
            full_key = f"{prefix}.{key}" if prefix else key
            if isinstance(item, dict):
                result.update(self._flatten_dict(item, full_key))
            else:
                result[full_key] = item
        return result
