"""
Utility functions for file operations.
"""

import json
import os
from typing import Any

from secorder.errors import UsageError


def load_json(file_path):
    """
    Read a JSON document from disk.

    Args:
        file_path (str): Path to the JSON file

    Returns:
        The decoded document
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise UsageError(f"File not found: {file_path}")
    except json.JSONDecodeError as e:
        raise UsageError(f"Malformed JSON in {file_path}: {e}")
    except UnicodeDecodeError as e:
        raise UsageError(f"File is not UTF-8 text: {file_path}: {e}")
    except OSError as e:
        raise UsageError(f"Cannot read {file_path}: {e.strerror or e}")


def dump_json(document: Any) -> str:
    """Serialize a document the way every command prints JSON."""
    return json.dumps(document, indent=2, ensure_ascii=False)


def save_output(text, file_path):
    """
    Write command output to a file.

    Args:
        text (str): Content to write; a trailing newline is added if missing
        file_path (str): Destination path

    Returns:
        str: Path to the saved file
    """
    directory = os.path.dirname(os.path.abspath(file_path))
    os.makedirs(directory, exist_ok=True)

    if not text.endswith('\n'):
        text += '\n'
    try:
        with open(file_path, 'w', encoding='utf-8') as f:
            f.write(text)
    except OSError as e:
        raise UsageError(f"Cannot write {file_path}: {e}")
    return file_path
