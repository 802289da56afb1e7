import copy
import json
import os
from typing import Any, Dict, Optional

from src.core.constants import (
    DEFAULT_CHUNK_SIZE, DEFAULT_FULL_BUDGET, DEFAULT_JOBS, LOG_DIR, SETTINGS_FILE
)
from src.core.logger import get_logger

DEFAULT_SETTINGS = {
    "sweep": {
        "full_budget": DEFAULT_FULL_BUDGET,
        "chunk_size": DEFAULT_CHUNK_SIZE,
        "jobs": DEFAULT_JOBS,
        "progress": True
    },
    "logging": {
        "level": "WARNING",  # DEBUG, INFO, WARNING, ERROR
        "log_dir": LOG_DIR
    }
}


class SettingsManager:
    def __init__(self, path: Optional[str] = None):
        self.path = path or SETTINGS_FILE
        self.settings = copy.deepcopy(DEFAULT_SETTINGS)
        self.load()

    def load(self):
        """Load settings from file."""
        if not os.path.exists(self.path):
            return

        try:
            with open(self.path, 'r', encoding='utf-8') as f:
                saved = json.load(f)
                # Merge with defaults to ensure all keys exist
                self._recursive_update(self.settings, saved)
            get_logger().debug(f"Settings loaded from {self.path}")
        except Exception as e:
            get_logger().error(f"Failed to load settings from {self.path}: {e}")

    def save(self):
        """Save settings to file."""
        try:
            with open(self.path, 'w', encoding='utf-8') as f:
                json.dump(self.settings, f, indent=4)
            get_logger().info(f"Settings saved to {self.path}")
        except Exception as e:
            get_logger().error(f"Failed to save settings: {e}")

    def _recursive_update(self, base: Dict, update: Dict):
        """Update dictionary recursively, preserving structure."""
        for k, v in update.items():
            if k in base and isinstance(base[k], dict) and isinstance(v, dict):
                self._recursive_update(base[k], v)
            else:
                base[k] = v

    def get(self, category: str, key: str) -> Any:
        return self.settings.get(category, {}).get(key)

    def set(self, category: str, key: str, value: Any):
        if category not in self.settings:
            self.settings[category] = {}
        self.settings[category][key] = value
        self.save()
