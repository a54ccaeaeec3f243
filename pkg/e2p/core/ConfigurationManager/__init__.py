from .YAMLLoader import YAMLLoader
from .SettingLoader import SettingLoader
