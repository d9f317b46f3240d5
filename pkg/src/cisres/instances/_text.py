"""Small parsing/formatting helpers shared by the instance literals."""

from __future__ import annotations

from fractions import Fraction

from ..errors import ParseError

_OPEN = "([{<⟨"
_CLOSE = ")]}>⟩"


def split_top(text: str, sep: str = ",") -> list[str]:
    """Split ``text`` on ``sep`` characters that are not nested in brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur).strip())
    return parts


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def strip_brackets(text: str, pairs: str = "()") -> str | None:
    """Return the inside of ``text`` if it is wrapped by the bracket pair."""
    text = text.strip()
    if len(text) >= 2 and text[0] == pairs[0] and text[-1] == pairs[1]:
        return text[1:-1]
    return None


def parse_point_set(text: str) -> list[Fraction]:
    """Parse ``{a,b,...}`` (braces optional) into a list of rationals."""
    inner = strip_brackets(text, "{}")
    inner = text if inner is None else inner
    inner = inner.strip()
    if not inner:
        return []
    return [parse_rational(t) for t in split_top(inner)]


def format_point_set(points) -> str:
    return "{" + ",".join(format_rational(p) for p in points) + "}"
