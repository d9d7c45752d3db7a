"""
Verification Results

Checks return CheckResult values instead of raising so that a verification run can collect every failure along with
the witness that exposed it. A VerificationReport groups the named checks run against one object.
"""


from typing import Any, Generic, Iterator, Type, TypeVar

T = TypeVar("T")


class CheckResult(Generic[T]):
    Failed: "Type[CheckFailed[T]]"
    Passed: "Type[CheckPassed[T]]"

    name: str

    @property
    def witness(self) -> Any:
        return

    def value_or(self, default: T) -> T:
        return

    def __bool__(self) -> bool:
        return False


class CheckPassed(CheckResult[T]):
    __match_args__ = ("value",)

    def __init__(self, name: str, value: T = None):
        self.name = name
        self._value = value

    @property
    def value(self) -> T:
        return self._value

    def value_or(self, default: T) -> T:
        return self._value

    def __bool__(self) -> bool:
        return True

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class CheckFailed(CheckResult[T]):
    __match_args__ = ("witness",)

    def __init__(self, name: str, witness: Any, message: str = ""):
        self.name = name
        self._witness = witness
        self.message = message

    @property
    def witness(self) -> Any:
        return self._witness

    def value_or(self, default: T) -> T:
        return default

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}: {self.message} witness={self._witness!r}>"


CheckResult.Passed = CheckPassed
CheckResult.Failed = CheckFailed


class VerificationFailed(AssertionError):
    def __init__(self, report: "VerificationReport"):
        self.report = report
        super().__init__(
            f"{report.subject}: "
            + "; ".join(f"{failure.name} ({failure.message})" for failure in report.failures)
        )


class VerificationReport:
    """Ordered collection of named checks against a single subject. Truthy when every check passed."""

    def __init__(self, subject: str, checks: "list[CheckResult] | None" = None):
        self.subject = subject
        self.checks: list[CheckResult] = list(checks or [])

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def passed(self, name: str, value: Any = None) -> CheckResult:
        return self.add(CheckResult.Passed(name, value))

    def failed(self, name: str, witness: Any, message: str = "") -> CheckResult:
        return self.add(CheckResult.Failed(name, witness, message))

    def extend(self, other: "VerificationReport"):
        self.checks.extend(other.checks)

    @property
    def failures(self) -> list[CheckFailed]:
        return [check for check in self.checks if not check]

    @property
    def ok(self) -> bool:
        return not self.failures

    def raise_on_failure(self) -> "VerificationReport":
        if not self.ok:
            raise VerificationFailed(self)

        return self

    def as_dict(self) -> dict[str, Any]:
        entries = []
        for check in self.checks:
            match check:
                case CheckResult.Failed(witness):
                    entries.append(
                        {"check": check.name, "status": "fail", "message": check.message, "witness": repr(witness)}
                    )

                case _:
                    entry = {"check": check.name, "status": "pass"}
                    if (value := check.value_or(None)) is not None:
                        entry["value"] = value

                    entries.append(entry)

        return {"subject": self.subject, "status": "pass" if self.ok else "fail", "checks": entries}

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.checks)

    def __repr__(self):
        return f"<{type(self).__name__} {self.subject}: {len(self.checks)} checks, {len(self.failures)} failed>"
