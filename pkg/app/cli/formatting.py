"""
Renderers for command reports: JSON (default), markdown and CSV.
"""

import json
from typing import Any, List, Optional

import pandas as pd


def render_json(document: dict) -> str:
    """Byte-stable JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _is_flat(values: list) -> bool:
    return all(not isinstance(v, (dict, list)) for v in values)


def _matrix_table(rows: List[list]) -> List[str]:
    width = max(len(row) for row in rows)
    header = "| " + " | ".join(str(k) for k in range(width)) + " |"
    lines = [header, "|" + "---|" * width]
    lines.extend("| " + " | ".join(_scalar(x) for x in row) + " |" for row in rows)
    return lines


def _is_shallow(value: Any) -> bool:
    if isinstance(value, list):
        return _is_flat(value)
    return not isinstance(value, dict)


def _inline(value: Any) -> str:
    if isinstance(value, list):
        return f"({', '.join(_scalar(v) for v in value)})"
    return _scalar(value)


def _item_lines(item: Any, n: int, depth: int) -> List[str]:
    """One list entry: a single line when its fields are flat, else a numbered group."""
    indent = "  " * depth
    if isinstance(item, dict) and all(_is_shallow(v) for v in item.values()):
        fields = "; ".join(f"**{k}**: {_inline(item[k])}" for k in sorted(item))
        return [f"{indent}- {fields}"]
    if isinstance(item, list) and _is_flat(item):
        return [f"{indent}- {_inline(item)}"]
    lines = [f"{indent}- **#{n}**:"]
    if isinstance(item, dict):
        lines.extend(_markdown_lines(item, depth + 1))
    elif isinstance(item, list):
        for k, sub in enumerate(item, start=1):
            lines.extend(_item_lines(sub, k, depth + 1))
    else:
        lines[0] = f"{indent}- {_scalar(item)}"
    return lines


def _markdown_lines(document: Any, depth: int = 0) -> List[str]:
    indent = "  " * depth
    lines: List[str] = []
    if isinstance(document, dict):
        for key in sorted(document):
            value = document[key]
            if isinstance(value, dict):
                lines.append(f"{indent}- **{key}**:")
                lines.extend(_markdown_lines(value, depth + 1))
            elif isinstance(value, list) and value and all(
                isinstance(v, list) and _is_flat(v) for v in value
            ) and depth == 0:
                lines.append(f"{indent}- **{key}**:")
                lines.append("")
                lines.extend(_matrix_table(value))
                lines.append("")
            elif isinstance(value, list) and not _is_flat(value):
                lines.append(f"{indent}- **{key}**:")
                for n, item in enumerate(value, start=1):
                    lines.extend(_item_lines(item, n, depth + 1))
            elif isinstance(value, list):
                lines.append(f"{indent}- **{key}**: {_inline(value)}")
            else:
                lines.append(f"{indent}- **{key}**: {_scalar(value)}")
    elif isinstance(document, list):
        for n, item in enumerate(document, start=1):
            lines.extend(_item_lines(item, n, depth))
    else:
        lines.append(f"{indent}- {_scalar(document)}")
    return lines


def render_markdown(command: str, document: dict) -> str:
    """Human-readable report: a heading plus nested bullets, matrices as tables."""
    lines = [f"# {command}", ""]
    lines.extend(_markdown_lines(document))
    return "\n".join(lines).rstrip() + "\n"


def render_csv(frame: Optional[pd.DataFrame]) -> str:
    """CSV of a sequence frame (columns m, ...)."""
    if frame is None:
        raise ValueError("No sequence data to export")
    return frame.to_csv(index=False, lineterminator="\n")
