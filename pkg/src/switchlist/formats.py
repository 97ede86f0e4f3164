"""Line-oriented text formats for switch-lists and truth tables.

Switch-list file::

    n=4
    order=3,4,1,2
    f0=1
    switches=1,12

Truth-table file: ``n=<int>`` then one line of ``2**n`` characters ``0``/``1``,
index 0 first.  Table files written by the CLI use canonical indexing.
"""
from __future__ import annotations

from pathlib import Path

from switchlist.core import SwitchList, SwitchListError, TruthTable, VarOrder


class ParseError(SwitchListError):
    """Malformed input file; ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _field(lines: list[str], lineno: int, key: str) -> str:
    if len(lines) < lineno:
        raise ParseError(lineno, f"missing '{key}=' line")
    line = lines[lineno - 1].strip()
    prefix = key + "="
    if not line.startswith(prefix):
        raise ParseError(lineno, f"expected '{prefix}...', got {line!r}")
    return line[len(prefix):].strip()


def _int(text: str, lineno: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {text!r}") from None


def _check_trailing(lines: list[str], used: int) -> None:
    for k, extra in enumerate(lines[used:], start=used + 1):
        if extra.strip():
            raise ParseError(k, f"unexpected content {extra.strip()!r}")


def dumps_switchlist(sl: SwitchList) -> str:
    return (
        f"n={sl.n}\n"
        f"order={sl.order}\n"
        f"f0={sl.first_value}\n"
        f"switches={','.join(map(str, sl.switches))}\n"
    )


def loads_switchlist(text: str) -> SwitchList:
    lines = text.splitlines()
    n = _int(_field(lines, 1, "n"), 1)
    order_text = _field(lines, 2, "order")
    try:
        order = VarOrder.parse(order_text, n)
    except SwitchListError as exc:
        raise ParseError(2, str(exc)) from None
    f0 = _int(_field(lines, 3, "f0"), 3)
    raw = _field(lines, 4, "switches")
    switches = tuple(_int(tok, 4) for tok in raw.split(",")) if raw else ()
    _check_trailing(lines, 4)
    try:
        return SwitchList(n, order, f0, switches)
    except SwitchListError as exc:
        raise ParseError(4 if switches else 3, str(exc)) from None


def dumps_table(t: TruthTable) -> str:
    return f"n={t.n}\n" + "".join("01"[v] for v in t.bits) + "\n"


def loads_table(text: str) -> TruthTable:
    lines = text.splitlines()
    n = _int(_field(lines, 1, "n"), 1)
    if not 1 <= n <= 20:
        raise ParseError(1, f"table files support 1 <= n <= 20, got {n}")
    if len(lines) < 2:
        raise ParseError(2, "missing value line")
    row = lines[1].strip()
    if len(row) != 1 << n:
        raise ParseError(2, f"expected {1 << n} values, got {len(row)}")
    bad = [c for c in row if c not in "01"]
    if bad:
        raise ParseError(2, f"values must be 0 or 1, found {bad[0]!r}")
    _check_trailing(lines, 2)
    return TruthTable(n, bytes(c == "1" for c in row))


def read_switchlist(path: str | Path) -> SwitchList:
    return loads_switchlist(Path(path).read_text(encoding="utf-8"))


def write_switchlist(path: str | Path, sl: SwitchList) -> None:
    Path(path).write_text(dumps_switchlist(sl), encoding="utf-8")


def read_table(path: str | Path) -> TruthTable:
    return loads_table(Path(path).read_text(encoding="utf-8"))


def write_table(path: str | Path, t: TruthTable) -> None:
    Path(path).write_text(dumps_table(t), encoding="utf-8")
