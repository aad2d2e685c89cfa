"""Verdicts and replayable certificates.

Every decision procedure in the package is written as a *rule*: a function that
reads symbol values through an evaluator ``ev(kind, *args)`` and returns a
clause name plus an outcome.  Running a rule with a recording evaluator yields
the certificate; running it again with a replaying evaluator (which recomputes
each recorded symbol and refuses unrecorded ones) re-derives the verdict.
"""

import enum
from dataclasses import dataclass, field


class Verdict(enum.Enum):
    SPLIT = "Split"
    DIVISION = "Division"

    def __str__(self):
        return self.value


class CertificateMismatch(AssertionError):
    """Replaying a certificate did not reproduce its recorded values or verdict."""


_KINDS = {}


def _eval_symbol(kind, args):
    if not _KINDS:
        # filled on first use: local/quadfields import this module
        from quatdiv.arith import _jacobi
        from quatdiv.local import conic_solvable_mod, hilbert_symbol
        from quatdiv.quadfields import splits_completely_ds

        _KINDS.update(
            legendre=_jacobi,
            mod=lambda n, m: n % m,
            hilbert=hilbert_symbol,
            conic=conic_solvable_mod,
            splits=splits_completely_ds,
        )
    try:
        fn = _KINDS[kind]
    except KeyError:
        raise KeyError(f"unknown symbol kind {kind!r}") from None
    return fn(*args)


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(y) for y in x)
    return x


@dataclass(frozen=True)
class Symbol:
    kind: str
    args: tuple
    value: object

    def to_dict(self):
        args = [list(a) if isinstance(a, tuple) else a for a in self.args]
        return {"kind": self.kind, "args": args, "value": self.value}

    @classmethod
    def from_dict(cls, obj):
        return cls(obj["kind"], _freeze(obj["args"]), obj["value"])


class Recorder:
    """Evaluator that computes symbols and remembers them in call order."""

    def __init__(self):
        self.symbols = {}

    def __call__(self, kind, *args):
        key = (kind, args)
        if key not in self.symbols:
            self.symbols[key] = _eval_symbol(kind, args)
        return self.symbols[key]

    def as_tuple(self):
        return tuple(Symbol(k, a, v) for (k, a), v in self.symbols.items())


class Replayer:
    """Evaluator backed by recorded symbols; each is re-checked on first use."""

    def __init__(self, symbols):
        self.recorded = {(s.kind, s.args): s.value for s in symbols}
        self.checked = set()

    def __call__(self, kind, *args):
        key = (kind, args)
        if key not in self.recorded:
            raise CertificateMismatch(f"rule needs {kind}{args}, absent from certificate")
        value = self.recorded[key]
        if key not in self.checked:
            actual = _eval_symbol(kind, args)
            if actual != value:
                raise CertificateMismatch(f"{kind}{args} recorded {value}, recomputed {actual}")
            self.checked.add(key)
        return value


@dataclass(frozen=True)
class Certificate:
    """Which rule fired, on which normalized inputs, with which symbol values.

    route is one of "theorem", "oracle", "local", "ramq"; ds is the tuple of generators
    the rule was evaluated over (empty for Q).  descent is set when the answer
    was obtained over a quadratic subfield of an odd-degree extension.
    """

    route: str
    clause: str
    p: int
    q: int
    ds: tuple
    symbols: tuple = ()
    delegated: bool = False
    swapped: bool = False
    descent: str | None = None

    def to_dict(self):
        return {
            "route": self.route,
            "clause": self.clause,
            "p": self.p,
            "q": self.q,
            "ds": list(self.ds),
            "symbols": [s.to_dict() for s in self.symbols],
            "delegated": self.delegated,
            "swapped": self.swapped,
            "descent": self.descent,
        }

    @classmethod
    def from_dict(cls, obj):
        return cls(
            route=obj["route"],
            clause=obj["clause"],
            p=obj["p"],
            q=obj["q"],
            ds=tuple(obj["ds"]),
            symbols=tuple(Symbol.from_dict(s) for s in obj["symbols"]),
            delegated=obj.get("delegated", False),
            swapped=obj.get("swapped", False),
            descent=obj.get("descent"),
        )


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    certificate: Certificate = field(compare=False)

    @property
    def is_division(self):
        return self.verdict is Verdict.DIVISION

    def to_dict(self):
        return {"verdict": str(self.verdict), "certificate": self.certificate.to_dict()}


def replay(certificate, verdict=None):
    """Re-run the certificate's rule over its recorded symbols.

    Returns the re-derived verdict; raises CertificateMismatch if any symbol
    value, the clause, or (when given) the expected verdict disagrees.
    """
    from quatdiv import classify, oracle, ramq

    rules = {
        "theorem": classify.theorem_rule,
        "oracle": oracle.oracle_rule,
        "local": oracle.local_brute_rule,
        "ramq": ramq.over_q_rule,
    }
    if certificate.route not in rules:
        raise CertificateMismatch(f"unknown route {certificate.route!r}")
    ev = Replayer(certificate.symbols)
    clause, got = rules[certificate.route](certificate.p, certificate.q, certificate.ds, ev)
    if certificate.delegated:
        if certificate.clause != "generic-oracle":
            raise CertificateMismatch(f"delegated certificate with clause {certificate.clause!r}")
    elif clause != certificate.clause:
        raise CertificateMismatch(f"clause {clause!r} != recorded {certificate.clause!r}")
    if verdict is not None and Verdict(str(verdict)) is not got:
        raise CertificateMismatch(f"replayed {got}, decision says {verdict}")
    return got
