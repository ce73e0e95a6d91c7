# Copyright (c) 2024 by Jonathan AW
# stpa_parser.py
# Summary: Reads the textual .stpa DSL into an StpaModel. Lexical, syntax and semantic problems are reported as positioned ParseErrors; no partial model is ever returned.
"""
Design Patterns:
1. Recursive Descent:
- One method per grammar production (_parse_controller, _parse_process_model, _parse_rule, ...). The grammar is documented in docs/dsl_reference.md.

2. Two-Phase Processing:
- The syntax phase builds positioned raw declarations; the resolution phase checks names and ranges against them and only then builds the frozen model objects. All semantic errors are collected before reporting.

3. Error Handling:
- The first syntax error stops the syntax phase (nothing after it can be trusted). Lexical and semantic errors are accumulated. Callers get a single StpaParseException carrying every ParseError.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from dal.models import (AbstractValue, BooleanDomain, Bound, BoundKind, Context, ControlAction, DcaRule, DcaType,
                        IntervalDomain, OpaqueDomain, ProcessModelVariable, SingletonDomain, StpaModel, UcaRule,
                        UcaType, ValueDomain)
from exceptions import InvalidStpaModelException, StpaParseException, UnresolvedReferenceException

logger = logging.getLogger(__name__)

KEYWORDS = ("controller", "processModel", "controlActions", "ucas", "dcas", "action", "type", "contexts")


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    length: int = 1

    def __post_init__(self):
        if self.length < 1:
            object.__setattr__(self, "length", 1)


@dataclass(frozen=True)
class ParseError:
    span: SourceSpan
    message: str
    kind: str = "syntax"

    def __str__(self) -> str:
        return f"{self.span.line}:{self.span.column}: {self.kind} error: {self.message}"


@dataclass(frozen=True)
class Token:
    kind: str  # ident | number | punct | eof
    text: str
    span: SourceSpan


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\f\v]+|\n)
  | (?P<comment>//[^\n]*)
  | (?P<number>-?\d+(?:\.\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[{}\[\](),=:])
""", re.VERBOSE)


def tokenize(text: str) -> Tuple[List[Token], List[ParseError]]:
    tokens: List[Token] = []
    errors: List[ParseError] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        column = pos - line_start + 1
        if match is None:
            errors.append(ParseError(SourceSpan(line, column, 1), f"unexpected character {text[pos]!r}", "lexical"))
            if text[pos] == "\n":
                line, line_start = line + 1, pos + 1
            pos += 1
            continue
        kind = match.lastgroup
        lexeme = match.group()
        if kind == "ws" and lexeme == "\n":
            line, line_start = line + 1, match.end()
        elif kind in ("number", "ident", "punct"):
            tokens.append(Token(kind, lexeme, SourceSpan(line, column, len(lexeme))))
        pos = match.end()
    tokens.append(Token("eof", "", SourceSpan(line, pos - line_start + 1, 1)))
    return tokens, errors


class _SyntaxStop(Exception):
    pass


# Raw, positioned declarations produced by the syntax phase.

@dataclass
class _RawBound:
    token: Token


@dataclass
class _RawValue:
    name: Token
    opener: Optional[Token] = None
    bounds: List[_RawBound] = field(default_factory=list)
    closer: Optional[Token] = None
    literal: Optional[Token] = None


@dataclass
class _RawVariable:
    name: Token
    values: List[_RawValue]


@dataclass
class _RawContext:
    name: Token
    assignments: List[Tuple[Token, Token]]


@dataclass
class _RawRule:
    name: Token
    action: Token
    kind: Token
    contexts: List[_RawContext]
    is_dca: bool


class StpaParser:
    """
    Parser for the .stpa DSL. One instance per text; use parse_stpa() for the common case.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Token] = []
        self.index = 0
        self.errors: List[ParseError] = []

    # ---------- entry point ----------

    def parse(self) -> StpaModel:
        self.tokens, lexical = tokenize(self.text)
        self.errors.extend(lexical)
        if self.errors:
            raise StpaParseException(sorted(self.errors, key=_error_key))
        try:
            raw = self._parse_controller()
        except _SyntaxStop:
            raise StpaParseException(sorted(self.errors, key=_error_key))
        model = self._resolve(*raw)
        if self.errors:
            raise StpaParseException(sorted(self.errors, key=_error_key))
        logger.debug("Parsed controller %s with %d rules", model.controller, len(model.rules))
        return model

    # ---------- token helpers ----------

    def _peek(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "eof":
            self.index += 1
        return token

    def _fail(self, token: Token, message: str) -> None:
        found = "end of input" if token.kind == "eof" else repr(token.text)
        self.errors.append(ParseError(token.span, f"{message}, found {found}", "syntax"))
        raise _SyntaxStop()

    def _expect(self, text: str) -> Token:
        token = self._peek()
        if token.text != text or token.kind == "eof":
            self._fail(token, f"expected '{text}'")
        return self._advance()

    def _expect_ident(self, what: str) -> Token:
        token = self._peek()
        if token.kind != "ident":
            self._fail(token, f"expected {what}")
        return self._advance()

    def _at(self, text: str) -> bool:
        token = self._peek()
        return token.kind != "eof" and token.text == text

    # ---------- productions ----------

    def _parse_controller(self):
        self._expect("controller")
        name = self._expect_ident("controller name")
        self._expect("{")
        variables: List[_RawVariable] = []
        actions: List[Token] = []
        rules: List[_RawRule] = []
        seen_sections: Dict[str, Token] = {}
        while not self._at("}"):
            section = self._peek()
            if section.text not in ("processModel", "controlActions", "ucas", "dcas") or section.kind != "ident":
                self._fail(section, "expected a section (processModel, controlActions, ucas, dcas) or '}'")
            if section.text in seen_sections:
                self.errors.append(ParseError(section.span, f"section '{section.text}' declared twice", "duplicate"))
            seen_sections[section.text] = section
            self._advance()
            self._expect("{")
            if section.text == "processModel":
                variables.extend(self._parse_process_model())
            elif section.text == "controlActions":
                actions.extend(self._parse_control_actions())
            else:
                rules.extend(self._parse_rules(is_dca=section.text == "dcas"))
            self._expect("}")
        self._expect("}")
        trailing = self._peek()
        if trailing.kind != "eof":
            self._fail(trailing, "expected end of input")
        return name, variables, actions, rules

    def _parse_process_model(self) -> List[_RawVariable]:
        variables = []
        while not self._at("}"):
            name = self._expect_ident("variable name")
            self._expect(":")
            self._expect("{")
            values = [self._parse_value()]
            while self._at(","):
                self._advance()
                values.append(self._parse_value())
            self._expect("}")
            variables.append(_RawVariable(name, values))
        return variables

    def _parse_value(self) -> _RawValue:
        name = self._expect_ident("value name")
        value = _RawValue(name)
        if not self._at("="):
            return value
        self._advance()
        token = self._peek()
        if token.kind == "ident" and token.text in ("true", "false"):
            value.literal = self._advance()
            return value
        if token.text not in ("[", "("):
            self._fail(token, "expected a value range ('true', 'false', '[' or '(')")
        value.opener = self._advance()
        value.bounds.append(self._parse_bound())
        if self._at(","):
            self._advance()
            value.bounds.append(self._parse_bound())
        closer = self._peek()
        if closer.text not in ("]", ")"):
            self._fail(closer, "expected ']' or ')'")
        value.closer = self._advance()
        return value

    def _parse_bound(self) -> _RawBound:
        token = self._peek()
        if token.kind not in ("ident", "number"):
            self._fail(token, "expected a bound (MIN, MAX, number or name)")
        return _RawBound(self._advance())

    def _parse_control_actions(self) -> List[Token]:
        actions = []
        if self._at("}"):
            return actions
        actions.append(self._expect_ident("control action name"))
        while self._at(","):
            self._advance()
            actions.append(self._expect_ident("control action name"))
        return actions

    def _parse_rules(self, is_dca: bool) -> List[_RawRule]:
        rules = []
        while not self._at("}"):
            name = self._expect_ident("rule id")
            self._expect("{")
            self._expect("action")
            action = self._expect_ident("control action name")
            self._expect("type")
            kind = self._expect_ident("rule type")
            self._expect("contexts")
            self._expect("{")
            contexts = []
            while not self._at("}"):
                contexts.append(self._parse_context())
            self._expect("}")
            self._expect("}")
            rules.append(_RawRule(name, action, kind, contexts, is_dca))
        return rules

    def _parse_context(self) -> _RawContext:
        name = self._expect_ident("context id")
        self._expect("[")
        assignments = [self._parse_assignment()]
        while self._at(","):
            self._advance()
            assignments.append(self._parse_assignment())
        self._expect("]")
        return _RawContext(name, assignments)

    def _parse_assignment(self) -> Tuple[Token, Token]:
        variable = self._expect_ident("variable name")
        self._expect("=")
        value = self._expect_ident("value name")
        return variable, value

    # ---------- resolution ----------

    def _error(self, token: Token, message: str, kind: str) -> None:
        self.errors.append(ParseError(token.span, message, kind))

    def _resolve(self, name: Token, raw_variables, raw_actions, raw_rules) -> Optional[StpaModel]:
        variables: Dict[str, ProcessModelVariable] = {}
        for raw in raw_variables:
            if raw.name.text in variables:
                self._error(raw.name, f"duplicate variable '{raw.name.text}'", "duplicate")
                continue
            variable = self._resolve_variable(raw)
            if variable is not None:
                variables[variable.name] = variable

        actions: List[str] = []
        for token in raw_actions:
            if token.text in actions:
                self._error(token, f"duplicate control action '{token.text}'", "duplicate")
            else:
                actions.append(token.text)

        ucas, dcas, rule_ids = [], [], set()
        for raw in raw_rules:
            if raw.name.text in rule_ids:
                self._error(raw.name, f"duplicate rule id '{raw.name.text}'", "duplicate")
                continue
            rule_ids.add(raw.name.text)
            rule = self._resolve_rule(raw, variables, actions)
            if rule is not None:
                (dcas if raw.is_dca else ucas).append(rule)

        if self.errors:
            return None
        try:
            return StpaModel(name.text, tuple(variables.values()), tuple(ControlAction(a) for a in actions),
                             tuple(ucas), tuple(dcas))
        except (InvalidStpaModelException, UnresolvedReferenceException) as exc:
            self._error(name, str(exc), "semantic")
            return None

    def _resolve_variable(self, raw: _RawVariable) -> Optional[ProcessModelVariable]:
        values: List[AbstractValue] = []
        names = set()
        failed = False
        for raw_value in raw.values:
            if raw_value.name.text in names:
                self._error(raw_value.name, f"duplicate value '{raw_value.name.text}' in variable '{raw.name.text}'",
                            "duplicate")
                failed = True
                continue
            names.add(raw_value.name.text)
            domain = self._resolve_domain(raw_value)
            if domain is None:
                failed = True
                continue
            values.append(AbstractValue(raw_value.name.text, domain))
        if failed:
            return None
        try:
            return ProcessModelVariable(raw.name.text, tuple(values))
        except InvalidStpaModelException as exc:
            self._error(raw.name, str(exc), "range")
            return None

    def _resolve_domain(self, raw: _RawValue) -> Optional[ValueDomain]:
        if raw.literal is not None:
            return BooleanDomain(raw.literal.text == "true")
        if raw.opener is None:
            if raw.name.text in ("true", "false"):
                return BooleanDomain(raw.name.text == "true")
            return OpaqueDomain()
        bounds = [self._to_bound(b.token) for b in raw.bounds]
        if len(bounds) == 1:
            if raw.opener.text != "[" or raw.closer.text != "]":
                self._error(raw.opener, "a single-bound range must be written '[bound]'", "range")
                return None
            if bounds[0].is_unbounded:
                self._error(raw.bounds[0].token, "a single-bound range cannot use MIN or MAX", "range")
                return None
            return SingletonDomain(bounds[0])
        lower, upper = bounds
        if upper.kind == BoundKind.MIN:
            self._error(raw.bounds[1].token, "MIN cannot be an upper bound", "range")
            return None
        if lower.kind == BoundKind.MAX:
            self._error(raw.bounds[0].token, "MAX cannot be a lower bound", "range")
            return None
        if lower.kind == BoundKind.NUMBER and upper.kind == BoundKind.NUMBER and float(lower.text) > float(upper.text):
            self._error(raw.bounds[0].token, "lower bound exceeds upper bound", "range")
            return None
        return IntervalDomain(lower, raw.opener.text == "[", upper, raw.closer.text == "]")

    @staticmethod
    def _to_bound(token: Token) -> Bound:
        if token.kind == "number":
            return Bound.number(token.text)
        if token.text == "MIN":
            return Bound.minimum()
        if token.text == "MAX":
            return Bound.maximum()
        return Bound.reference(token.text)

    def _resolve_rule(self, raw: _RawRule, variables: Dict[str, ProcessModelVariable], actions: List[str]):
        ok = True
        if raw.action.text not in actions:
            self._error(raw.action, f"unknown control action '{raw.action.text}'", "reference")
            ok = False
        kind = DcaType.from_keyword(raw.kind.text) if raw.is_dca else UcaType.from_keyword(raw.kind.text)
        if kind is None:
            allowed = ", ".join(k.keyword for k in (DcaType if raw.is_dca else UcaType))
            self._error(raw.kind, f"unknown rule type '{raw.kind.text}' (expected one of {allowed})", "syntax")
            ok = False
        if not raw.contexts:
            self._error(raw.name, f"rule '{raw.name.text}' has no contexts", "syntax")
            ok = False
        contexts, context_ids = [], set()
        for raw_context in raw.contexts:
            if raw_context.name.text in context_ids:
                self._error(raw_context.name, f"duplicate context id '{raw_context.name.text}'", "duplicate")
                ok = False
                continue
            context_ids.add(raw_context.name.text)
            context = self._resolve_context(raw_context, variables)
            ok = ok and context is not None
            contexts.append(context)
        if not ok:
            return None
        if raw.is_dca:
            return DcaRule(raw.name.text, raw.action.text, kind, tuple(contexts))
        return UcaRule(raw.name.text, raw.action.text, kind, tuple(contexts))

    def _resolve_context(self, raw: _RawContext, variables: Dict[str, ProcessModelVariable]) -> Optional[Context]:
        ok = True
        seen = set()
        for variable, value in raw.assignments:
            if variable.text not in variables:
                self._error(variable, f"unknown variable '{variable.text}'", "reference")
                ok = False
                continue
            if variable.text in seen:
                self._error(variable, f"variable '{variable.text}' assigned twice in context", "duplicate")
                ok = False
                continue
            seen.add(variable.text)
            if value.text not in variables[variable.text].value_names:
                self._error(value, f"unknown value '{value.text}' for variable '{variable.text}'", "reference")
                ok = False
        if not ok:
            return None
        return Context(raw.name.text, tuple((v.text, w.text) for v, w in raw.assignments))


def _error_key(error: ParseError):
    return error.span.line, error.span.column, error.message


def parse_stpa(text: str) -> StpaModel:
    """
    Parse .stpa text into a fully resolved model; raise StpaParseException with every error otherwise.
    """
    return StpaParser(text).parse()


def decode_source(data: bytes) -> str:
    """
    UTF-8 text of an .stpa file. The first byte that is not valid UTF-8 is a lexical error at its line and column.
    """
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        before = data[:e.start].decode("utf-8")
        line = before.count("\n") + 1
        column = len(before) - before.rfind("\n")
        error = ParseError(SourceSpan(line, column, 1), f"invalid UTF-8 byte 0x{data[e.start]:02x}", "lexical")
        raise StpaParseException([error]) from e


def format_diagnostics(errors: List[ParseError], text: str) -> str:
    """
    Human-readable report with one underlined snippet per error, ordered by line and column.
    """
    if not errors:
        return ""
    lines = text.splitlines()
    chunks = []
    for error in sorted(errors, key=_error_key):
        span = error.span
        source = lines[span.line - 1] if 0 < span.line <= len(lines) else ""
        underline = " " * (span.column - 1) + "^" + "~" * (span.length - 1)
        chunks.append(f"{span.line}:{span.column}: {error.kind} error: {error.message}\n"
                      f"    {source}\n"
                      f"    {underline}")
    return "\n".join(chunks) + "\n"
