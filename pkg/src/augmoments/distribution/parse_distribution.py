"""Parser for distribution literals: gauss(mu,sigma), unif(lo,hi), dirac(v), prod(a,b)."""

# stdlib
import re

# third party
from pydantic import ValidationError

# local
from augmoments.errors import ArgumentError
from augmoments.models.distribution import Dirac, Gaussian, ParamDistribution, Product, Uniform

_TOKEN = re.compile(r"\s*(?:(?P<name>[a-z]+)|(?P<number>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)|(?P<punct>[(),]))")


def _tokenize(text: str) -> list[str]:
    tokens, position = [], 0
    text = text.strip()
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            raise ArgumentError(f"unexpected character {text[position]!r} at position {position} in {text!r}")
        tokens.append(match.group(match.lastgroup))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.position = 0

    def _next(self) -> str:
        if self.position >= len(self.tokens):
            raise ArgumentError(f"unexpected end of distribution literal {self.text!r}")
        token = self.tokens[self.position]
        self.position += 1
        return token

    def _expect(self, token: str) -> None:
        found = self._next()
        if found != token:
            raise ArgumentError(f"expected {token!r}, found {found!r} in {self.text!r}")

    def _number(self) -> float:
        token = self._next()
        try:
            return float(token)
        except ValueError:
            raise ArgumentError(f"expected a number, found {token!r} in {self.text!r}") from None

    def parse(self) -> ParamDistribution:
        dist = self._distribution()
        if self.position != len(self.tokens):
            raise ArgumentError(f"trailing input after distribution in {self.text!r}")
        return dist

    def _distribution(self) -> ParamDistribution:
        name = self._next()
        self._expect("(")
        if name == "prod":
            first = self._distribution()
            self._expect(",")
            second = self._distribution()
            self._expect(")")
            if isinstance(first, Product) or isinstance(second, Product):
                raise ArgumentError(f"nested prod() is not supported in {self.text!r}")
            return Product(first=first, second=second)
        if name == "dirac":
            value = self._number()
            self._expect(")")
            return Dirac(at=value)
        if name in ("gauss", "unif"):
            a = self._number()
            self._expect(",")
            b = self._number()
            self._expect(")")
            return Gaussian(mean=a, std=b) if name == "gauss" else Uniform(lo=a, hi=b)
        raise ArgumentError(f"unknown distribution {name!r} in {self.text!r}")


def parse_distribution(text: str) -> ParamDistribution:
    """Parse a distribution literal, e.g. "prod(gauss(0,0.04),gauss(0,0.04))"."""
    try:
        return _Parser(text).parse()
    except ValidationError as e:
        raise ArgumentError(f"invalid distribution {text!r}: {e.errors()[0]['msg']}") from None
