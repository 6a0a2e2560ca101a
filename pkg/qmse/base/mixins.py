import json
import logging


class LoggerMixin:
    @property
    def logger(self):
        return logging.getLogger(self.__class__.__name__)


class SerializableMixin:
    """
    Adds JSON round-tripping on top of ``to_dict`` / ``from_dict``.

    Subclasses implement ``to_dict()`` and the classmethod ``from_dict(d)``.

    """
    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))
