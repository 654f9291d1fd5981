#!/usr/bin/env python3
"""
Text formatter for RTA engine reports
Plain 79-column console output
"""

import textwrap
from typing import Dict, Iterable, Sequence, Tuple

PASS_MARK = "✓"
FAIL_MARK = "✗"


class ReportFormatter:
    """Format engine reports for the console"""

    def __init__(self, max_line_length: int = 79):
        self.max_line_length = max_line_length

    def wrap_text(self, text: str, indent: str = "") -> str:
        """Wrap text to max line length, keeping blank lines"""
        if not text:
            return ""
        wrapped = []
        for paragraph in text.split('\n'):
            if paragraph.strip():
                wrapped.append(textwrap.fill(paragraph.strip(), width=self.max_line_length,
                                             initial_indent=indent, subsequent_indent=indent + "  "))
            else:
                wrapped.append("")
        return '\n'.join(wrapped)

    def format_header(self, text: str, char: str = "=") -> str:
        header_line = char * min(len(text) + 4, self.max_line_length)
        return f"{header_line}\n{text.center(len(header_line))}\n{header_line}"

    def format_separator(self, char: str = "-") -> str:
        return char * self.max_line_length

    def format_status(self, ok: bool, text: str) -> str:
        return self.wrap_text(f"{PASS_MARK if ok else FAIL_MARK} {text}")

    def format_table(self, rows: Iterable[Tuple[str, str]], indent: str = "  ") -> str:
        """Aligned key/value lines, long values wrapped under their column"""
        rows = list(rows)
        if not rows:
            return ""
        width = min(max(len(k) for k, _ in rows), self.max_line_length // 3)
        output = []
        for key, value in rows:
            lead = f"{indent}{key:<{width}} : "
            output.append(textwrap.fill(str(value), width=self.max_line_length, initial_indent=lead,
                                        subsequent_indent=" " * len(lead)) if value != "" else lead.rstrip())
        return '\n'.join(output)

    def format_columns(self, header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
        widths = [len(h) for h in header]
        for row in rows:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(cell))
        lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
                 "  ".join("-" * w for w in widths)]
        for row in rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        return '\n'.join(lines)

    def format_report(self, title: str, rows: Iterable[Tuple[str, str]], lines: Sequence[str] = ()) -> str:
        output = [self.format_header(title), self.format_table(rows)]
        if lines:
            output.append(self.format_separator())
            output.extend(self.wrap_text(line, "  ") for line in lines)
        return '\n'.join(o for o in output if o)

    def format_help(self, commands: Dict[str, str]) -> str:
        output = [self.format_header("RTA ENGINE - COMMANDS"), ""]
        for cmd, desc in commands.items():
            output.append(textwrap.fill(desc, width=self.max_line_length, initial_indent=f"  {cmd:<14} - ",
                                        subsequent_indent=" " * 19))
        output.append(self.format_separator("-"))
        return '\n'.join(output)
