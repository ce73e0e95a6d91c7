# Copyright (c) 2024 by Jonathan AW

# dal/schemas/all_schemas.py
"""
Explicit Schemas for the SBM JSON documents

1. Fine-Grained Control Over Validation:
- Enumerated fields (bound kinds, state origins, transition kinds, formula operators) are checked with validate.OneOf, and every schema raises on unknown fields.

2. Decoupled from the Model Classes:
- The frozen model classes know nothing about JSON. pre_dump hooks turn them into plain dicts, post_load hooks rebuild them, so the file layout can change without touching dal/models.py or dal/statechart_models.py.

3. Explicit Nesting:
- Formulas are stored as operator trees (LtlFormulaSchema nests itself), guards as lists of valuation objects in variable declaration order.
"""
from marshmallow import RAISE, Schema, ValidationError, fields, post_load, pre_dump, validate, validates_schema

from bl.ltl.formulas import (And, Finally, Globally, Implies, LtlFalse, LtlTrue, Next, Not, Or, Release, Sent, Until,
                             VarEq)
from dal.models import (AbstractValue, BooleanDomain, Bound, BoundKind, Context, ContextValuation, DcaType,
                        IntervalDomain, OpaqueDomain, ProcessModelVariable, RuleInstance, RuleSource, SingletonDomain,
                        UcaType)
from dal.statechart_models import Guard, State, StateOrigin, Statechart, Transition, TransitionKind
from utils.data_validation import validate_identifier

DOCUMENT_FORMAT = "sbm/1"

_LEAF_OPS = {LtlTrue: "true", LtlFalse: "false", VarEq: "eq", Sent: "sent"}
_UNARY_OPS = {Not: "not", Next: "next", Globally: "globally", Finally: "finally"}
_BINARY_OPS = {And: "and", Or: "or", Implies: "implies", Until: "until", Release: "release"}
_NODES = {op: node for table in (_LEAF_OPS, _UNARY_OPS, _BINARY_OPS) for node, op in table.items()}


def identifier(name: str) -> None:
    is_valid, message = validate_identifier(name)
    if not is_valid:
        raise ValidationError(message)


class BoundSchema(Schema):
    class Meta:
        unknown = RAISE

    kind = fields.Str(required=True, validate=validate.OneOf([kind.value for kind in BoundKind]))
    text = fields.Str(required=True)

    @pre_dump
    def to_dict(self, bound, **kwargs):
        return {"kind": bound.kind.value, "text": bound.text}

    @post_load
    def make_bound(self, data, **kwargs):
        return Bound(BoundKind(data["kind"]), data["text"])


class ValueDomainSchema(Schema):
    class Meta:
        unknown = RAISE

    kind = fields.Str(required=True, validate=validate.OneOf(["boolean", "singleton", "interval", "opaque"]))
    value = fields.Bool()
    bound = fields.Nested(BoundSchema)
    lower = fields.Nested(BoundSchema)
    lower_inclusive = fields.Bool()
    upper = fields.Nested(BoundSchema)
    upper_inclusive = fields.Bool()

    @pre_dump
    def to_dict(self, domain, **kwargs):
        if isinstance(domain, BooleanDomain):
            return {"kind": "boolean", "value": domain.value}
        if isinstance(domain, SingletonDomain):
            return {"kind": "singleton", "bound": domain.bound}
        if isinstance(domain, IntervalDomain):
            return {"kind": "interval", "lower": domain.lower, "lower_inclusive": domain.lower_inclusive,
                    "upper": domain.upper, "upper_inclusive": domain.upper_inclusive}
        return {"kind": "opaque"}

    @validates_schema
    def check_shape(self, data, **kwargs):
        needed = {"boolean": ["value"], "singleton": ["bound"],
                  "interval": ["lower", "lower_inclusive", "upper", "upper_inclusive"], "opaque": []}
        missing = [name for name in needed[data["kind"]] if name not in data]
        if missing:
            raise ValidationError(f"{data['kind']} domain needs {', '.join(missing)}")

    @post_load
    def make_domain(self, data, **kwargs):
        if data["kind"] == "boolean":
            return BooleanDomain(data["value"])
        if data["kind"] == "singleton":
            return SingletonDomain(data["bound"])
        if data["kind"] == "interval":
            return IntervalDomain(data["lower"], data["lower_inclusive"], data["upper"], data["upper_inclusive"])
        return OpaqueDomain()


class AbstractValueSchema(Schema):
    class Meta:
        unknown = RAISE

    name = fields.Str(required=True, validate=identifier)
    domain = fields.Nested(ValueDomainSchema, required=True)

    @post_load
    def make_value(self, data, **kwargs):
        return AbstractValue(data["name"], data["domain"])


class ProcessModelVariableSchema(Schema):
    class Meta:
        unknown = RAISE

    name = fields.Str(required=True, validate=identifier)
    values = fields.Nested(AbstractValueSchema, many=True, required=True)

    @post_load
    def make_variable(self, data, **kwargs):
        return ProcessModelVariable(data["name"], tuple(data["values"]))


class ContextSchema(Schema):
    class Meta:
        unknown = RAISE

    name = fields.Str(required=True)
    assignments = fields.List(fields.Tuple((fields.Str(), fields.Str())), required=True)

    @post_load
    def make_context(self, data, **kwargs):
        return Context(data["name"], tuple(tuple(pair) for pair in data["assignments"]))


class RuleInstanceSchema(Schema):
    class Meta:
        unknown = RAISE

    rule_id = fields.Str(required=True)
    source = fields.Str(required=True, validate=validate.OneOf([source.value for source in RuleSource]))
    kind = fields.Str(required=True)
    action = fields.Str(required=True)
    context = fields.Nested(ContextSchema, required=True)
    order = fields.Int(required=True)

    @pre_dump
    def to_dict(self, instance, **kwargs):
        return {"rule_id": instance.rule_id, "source": instance.source.value, "kind": instance.kind.value,
                "action": instance.action, "context": instance.context, "order": instance.order}

    @validates_schema
    def check_kind(self, data, **kwargs):
        kinds = UcaType if data["source"] == RuleSource.UCA.value else DcaType
        if data["kind"] not in [kind.value for kind in kinds]:
            raise ValidationError(f"Unknown {data['source']} kind: {data['kind']}", "kind")

    @post_load
    def make_instance(self, data, **kwargs):
        source = RuleSource(data["source"])
        kind = UcaType(data["kind"]) if source == RuleSource.UCA else DcaType(data["kind"])
        return RuleInstance(data["rule_id"], source, kind, data["action"], data["context"], data["order"])


class LtlFormulaSchema(Schema):
    class Meta:
        unknown = RAISE

    op = fields.Str(required=True, validate=validate.OneOf(list(_NODES)))
    variable = fields.Str()
    value = fields.Str()
    action = fields.Str()
    operand = fields.Nested("LtlFormulaSchema")
    left = fields.Nested("LtlFormulaSchema")
    right = fields.Nested("LtlFormulaSchema")

    @pre_dump
    def to_tree(self, formula, **kwargs):
        if isinstance(formula, VarEq):
            return {"op": "eq", "variable": formula.variable, "value": formula.value}
        if isinstance(formula, Sent):
            return {"op": "sent", "action": formula.action}
        if type(formula) in _UNARY_OPS:
            return {"op": _UNARY_OPS[type(formula)], "operand": formula.operand}
        if type(formula) in _BINARY_OPS:
            return {"op": _BINARY_OPS[type(formula)], "left": formula.left, "right": formula.right}
        return {"op": _LEAF_OPS[type(formula)]}

    @validates_schema
    def check_arity(self, data, **kwargs):
        node = _NODES[data["op"]]
        if node is VarEq:
            needed = ["variable", "value"]
        elif node is Sent:
            needed = ["action"]
        elif node in _UNARY_OPS:
            needed = ["operand"]
        elif node in _BINARY_OPS:
            needed = ["left", "right"]
        else:
            needed = []
        missing = [name for name in needed if name not in data]
        if missing:
            raise ValidationError(f"operator {data['op']} needs {', '.join(missing)}")

    @post_load
    def make_formula(self, data, **kwargs):
        node = _NODES[data["op"]]
        if node is VarEq:
            return VarEq(data["variable"], data["value"])
        if node is Sent:
            return Sent(data["action"])
        if node in _UNARY_OPS:
            return node(data["operand"])
        if node in _BINARY_OPS:
            return node(data["left"], data["right"])
        return node()


class FormulaEntrySchema(Schema):
    class Meta:
        unknown = RAISE

    instance = fields.Nested(RuleInstanceSchema, required=True)
    formula = fields.Nested(LtlFormulaSchema, required=True)
    # informational; the tree is authoritative
    rendering = fields.Str()

    @pre_dump
    def to_dict(self, entry, **kwargs):
        instance, formula = entry
        return {"instance": instance, "formula": formula, "rendering": formula.render()}

    @post_load
    def make_entry(self, data, **kwargs):
        return data["instance"], data["formula"]


class StateSchema(Schema):
    class Meta:
        unknown = RAISE

    id = fields.Str(required=True, validate=identifier)
    emits = fields.Str(allow_none=True, load_default=None, validate=identifier)
    origin = fields.Str(required=True, validate=validate.OneOf([origin.value for origin in StateOrigin]))
    split_context = fields.Nested(ContextSchema, allow_none=True, load_default=None)

    @pre_dump
    def to_dict(self, state, **kwargs):
        return {"id": state.id, "emits": state.emits, "origin": state.origin.value,
                "split_context": state.split_context}

    @post_load
    def make_state(self, data, **kwargs):
        return State(data["id"], data["emits"], StateOrigin(data["origin"]), data["split_context"])


class TransitionSchema(Schema):
    class Meta:
        unknown = RAISE

    source = fields.Str(required=True, validate=identifier)
    target = fields.Str(required=True, validate=identifier)
    guard = fields.List(fields.Dict(keys=fields.Str(), values=fields.Str()), required=True)
    kind = fields.Str(required=True, validate=validate.OneOf([kind.value for kind in TransitionKind]))
    priority = fields.Int(required=True, validate=validate.Range(min=0))
    provenance = fields.List(fields.Str(), load_default=list)

    @pre_dump
    def to_dict(self, transition, **kwargs):
        return {"source": transition.source, "target": transition.target,
                "guard": [valuation.as_dict() for valuation in sorted(transition.guard.valuations)],
                "kind": transition.kind.value, "priority": transition.priority,
                "provenance": list(transition.provenance)}

    @post_load
    def make_transition(self, data, **kwargs):
        guard = Guard(frozenset(ContextValuation(tuple(valuation.items())) for valuation in data["guard"]))
        return Transition(data["source"], data["target"], guard, TransitionKind(data["kind"]), data["priority"],
                          tuple(data["provenance"]))


def _in_declared_order(valuation: ContextValuation, names) -> ContextValuation:
    values = valuation.as_dict()
    if set(values) != set(names):
        # left as read, check_statechart reports it
        return valuation
    return ContextValuation(tuple((name, values[name]) for name in names))


class StatechartSchema(Schema):
    class Meta:
        unknown = RAISE

    name = fields.Str(required=True, validate=identifier)
    initial = fields.Str(required=True, validate=identifier)
    variables = fields.Nested(ProcessModelVariableSchema, many=True, required=True)
    inputs = fields.List(fields.Str(validate=identifier), load_default=list)
    actions = fields.List(fields.Str(validate=identifier), required=True)
    states = fields.Nested(StateSchema, many=True, required=True)
    transitions = fields.Nested(TransitionSchema, many=True, required=True)

    @post_load
    def make_statechart(self, data, **kwargs):
        # guard objects may list their keys in any order; valuations compare in declaration order
        names = [variable.name for variable in data["variables"]]
        transitions = tuple(
            transition.with_guard(Guard(frozenset(_in_declared_order(valuation, names)
                                                  for valuation in transition.guard.valuations)))
            for transition in data["transitions"])
        return Statechart(data["name"], tuple(data["states"]), transitions, data["initial"],
                          tuple(data["variables"]), tuple(data["inputs"]), tuple(data["actions"]))


class SbmDocumentSchema(Schema):
    class Meta:
        unknown = RAISE

    format = fields.Str(required=True, validate=validate.Equal(DOCUMENT_FORMAT))
    statechart = fields.Nested(StatechartSchema, required=True)
    formulas = fields.Nested(FormulaEntrySchema, many=True, load_default=list)

    @post_load
    def make_document(self, data, **kwargs):
        return data["statechart"], tuple(data["formulas"])


class ReactionSchema(Schema):
    valuation = fields.Dict(keys=fields.Str(), values=fields.Str())
    state = fields.Str(allow_none=True)
    sent = fields.Str(allow_none=True)

    @pre_dump
    def to_dict(self, reaction, **kwargs):
        return {"valuation": reaction.valuation.as_dict(), "state": reaction.state, "sent": reaction.sent}


class MachineTraceSchema(Schema):
    prefix = fields.Nested(ReactionSchema, many=True)
    loop = fields.Nested(ReactionSchema, many=True)


class InputLassoSchema(Schema):
    prefix = fields.List(fields.Dict(keys=fields.Str(), values=fields.Str()))
    loop = fields.List(fields.Dict(keys=fields.Str(), values=fields.Str()))

    @pre_dump
    def to_dict(self, lasso, **kwargs):
        return {"prefix": [valuation.as_dict() for valuation in lasso.prefix],
                "loop": [valuation.as_dict() for valuation in lasso.loop]}


class FormulaVerdictSchema(Schema):
    label = fields.Str()
    rule_id = fields.Str()
    kind = fields.Str()
    formula = fields.Function(lambda verdict: verdict.formula.render())
    status = fields.Function(lambda verdict: verdict.status.value)
    holds = fields.Bool()
    counterexample = fields.Nested(MachineTraceSchema, allow_none=True)
    input_lasso = fields.Nested(InputLassoSchema, allow_none=True)


class VerificationReportSchema(Schema):
    """Dump-only; reports are never read back."""
    controller = fields.Str()
    bound = fields.Int()
    alphabet_size = fields.Int()
    lasso_count = fields.Int()
    passed = fields.Bool()
    results = fields.Nested(FormulaVerdictSchema, many=True)

class FormulaReportSchema(Schema):
    rule_id = fields.Str()
    source = fields.Str()
    kind = fields.Str()
    action = fields.Str()
    context = fields.Str()
    formula = fields.Str()

    @pre_dump
    def to_dict(self, entry, **kwargs):
        instance, formula = entry
        return {"rule_id": instance.rule_id, "source": instance.source.value.upper(), "kind": instance.kind.value,
                "action": instance.action, "context": instance.context.name, "formula": formula.render()}
