"""Tests for the console formatter"""

from lib.formatter import FAIL_MARK, PASS_MARK, ReportFormatter


def test_status_marks():
    formatter = ReportFormatter()
    assert formatter.format_status(True, "pbw ok") == f"{PASS_MARK} pbw ok"
    assert formatter.format_status(False, "pbw failed").startswith(FAIL_MARK)


def test_wrapping_respects_the_line_length():
    formatter = ReportFormatter(max_line_length=30)
    text = formatter.wrap_text("word " * 20)
    assert all(len(line) <= 30 for line in text.splitlines())
    assert formatter.wrap_text("") == ""


def test_table_alignment():
    formatter = ReportFormatter()
    table = formatter.format_table([("algebra", "u_sl2"), ("depth", "6")])
    assert table.splitlines() == ["  algebra : u_sl2", "  depth   : 6"]


def test_columns():
    formatter = ReportFormatter()
    text = formatter.format_columns(["mu", "m"], [["[1]", "1"], ["[-3]", "1"]])
    assert text.splitlines() == ["mu    m", "----  -", "[1]   1", "[-3]  1"]


def test_report_and_help():
    formatter = ReportFormatter()
    report = formatter.format_report("VERMA", [("depth", "3")], ["one singular vector"])
    assert "VERMA" in report
    assert report.splitlines()[-1] == "  one singular vector"
    help_text = formatter.format_help({"verma": "weight spaces of a Verma module"})
    assert "verma" in help_text
