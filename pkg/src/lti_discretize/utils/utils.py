import importlib.resources
import json
from typing import Iterable

import jinja2


def load_template(template_file: str, templates_package: str = 'lti_discretize.templates') -> str:
    """
    Load a Jinja template from the specified templates package.

    Args:
        template_file (str): The filename of the Jinja template.
        templates_package (str): The package path where templates are stored.

    Returns:
        str: The loaded template content.

    Raises:
        ValueError: If the template file is not found.
    """
    try:
        return importlib.resources.files(templates_package).joinpath(template_file).read_text(encoding='utf-8')
    except FileNotFoundError:
        raise ValueError(f"Template file '{template_file}' not found in '{templates_package}'.")


def format_number(value: float) -> str:
    """Format a float with 17 significant digits, enough to round-trip any float64."""
    return format(float(value), '.17g')


def format_vector(values: Iterable[float]) -> str:
    return "[" + ", ".join(format_number(v) for v in values) + "]"


def format_rows(rows: Iterable[Iterable[float]]) -> str:
    return "[" + ", ".join(format_vector(row) for row in rows) + "]"


def _rows_of(matrix) -> list:
    return matrix.to_rows() if hasattr(matrix, 'to_rows') else [list(row) for row in matrix]


def render_template(template_file: str, **context) -> str:
    """Render a template from the templates package with the number formatting filters installed."""
    environment = jinja2.Environment(keep_trailing_newline=True, autoescape=False)
    environment.filters['number'] = format_number
    environment.filters['vector'] = format_vector
    environment.filters['matrix'] = lambda m: format_rows(_rows_of(m))
    environment.filters['json_string'] = json.dumps
    return environment.from_string(load_template(template_file)).render(**context)
