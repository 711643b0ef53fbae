from .documents import (
    SystemDocument,
    dump_discrete_system,
    dump_system_document,
    dump_trajectory,
    load_system_document,
    parse_system_document,
)
from .main import cmd_check, cmd_discretize, cmd_simulate, main

__all__ = [
    "SystemDocument", "dump_discrete_system", "dump_system_document", "dump_trajectory",
    "load_system_document", "parse_system_document", "cmd_check", "cmd_discretize", "cmd_simulate", "main",
]
