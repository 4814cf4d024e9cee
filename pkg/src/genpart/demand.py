"""Split-demand instance expansion: replace each customer by co-located
copies whose demands form the minimal generating partition of the original
demand, and map non-split solutions back to per-fulfiller amounts."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping, Sequence

from .partitions import Partition, make_partition, minimal_generator, size_upper_bound


def _check_id(value) -> str:
    if not isinstance(value, str) or not value:
        raise ValueError(f"ids must be non-empty strings, got {value!r}")
    return value


def _check_demand(value, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ValueError(f"demands must be integers >= {minimum}, got {value!r}")
    return value


@dataclass(frozen=True)
class Customer:
    """One demand point; attrs carry opaque metadata such as coordinates.

    Demand 0 is tolerated only for pass-through rows (a depot lifted from a
    TSPLIB file); real customers have demand >= 1.
    """

    id: str
    demand: int
    attrs: dict

    def __post_init__(self) -> None:
        _check_id(self.id)
        _check_demand(self.demand, minimum=0)
        if not isinstance(self.attrs, dict):
            raise ValueError(f"attrs must be a mapping, got {self.attrs!r}")


@dataclass(frozen=True)
class InstanceSpec:
    """Customers with integer demands plus the fulfiller count k."""

    customers: tuple[Customer, ...]
    fulfiller_count: int

    def __post_init__(self) -> None:
        if isinstance(self.fulfiller_count, bool) or not isinstance(
            self.fulfiller_count, int
        ) or self.fulfiller_count < 1:
            raise ValueError(
                f"fulfiller_count must be a positive integer, got {self.fulfiller_count!r}"
            )
        seen = set()
        for customer in self.customers:
            if customer.id in seen:
                raise ValueError(f"duplicate customer id {customer.id!r}")
            seen.add(customer.id)
            _check_demand(customer.demand)


@dataclass(frozen=True)
class Copy:
    copy_id: str
    parent_id: str
    demand: int
    attrs: dict


@dataclass(frozen=True)
class ExpandedInstance:
    """Result of splitting every customer into copies.

    `provenance` maps each parent id to its copy ids in part order. Demand-0
    pass-through customers keep no copies and no provenance entry.
    """

    customers: tuple[Customer, ...]
    copies: tuple[Copy, ...]
    provenance: dict[str, tuple[str, ...]]
    fulfiller_count: int

    def validate(self) -> None:
        """Re-derive every invariant; raise ValueError on the first breach."""
        by_parent: dict[str, list[Copy]] = {c.id: [] for c in self.customers}
        for copy in self.copies:
            if copy.parent_id not in by_parent:
                raise ValueError(f"copy {copy.copy_id!r} has unknown parent")
            _check_demand(copy.demand)
            by_parent[copy.parent_id].append(copy)
        listed = [cid for ids in self.provenance.values() for cid in ids]
        if sorted(listed) != sorted(c.copy_id for c in self.copies):
            raise ValueError("provenance must list every copy exactly once")
        for customer in self.customers:
            copies = by_parent[customer.id]
            if customer.demand == 0:
                if copies:
                    raise ValueError(
                        f"pass-through customer {customer.id!r} must have no copies"
                    )
                continue
            expected = minimal_generator(customer.demand, self.fulfiller_count)
            got = sorted((c.demand for c in copies), reverse=True)
            if got != list(expected.parts):
                raise ValueError(
                    f"copies of {customer.id!r} carry demands {got}, "
                    f"expected {list(expected.parts)}"
                )


def expand_instance(instance: InstanceSpec) -> ExpandedInstance:
    """Split every customer into copies carrying the parts of its minimal
    generating partition; copy ids are `<parent>#<ordinal>` in part order."""
    k = instance.fulfiller_count
    customers = tuple(sorted(instance.customers, key=lambda c: c.id))
    copies: list[Copy] = []
    provenance: dict[str, tuple[str, ...]] = {}
    for customer in customers:
        parts = minimal_generator(customer.demand, k).parts
        ids = tuple(f"{customer.id}#{ordinal}" for ordinal in range(1, len(parts) + 1))
        for copy_id, demand in zip(ids, parts):
            copies.append(Copy(copy_id, customer.id, demand, dict(customer.attrs)))
        provenance[customer.id] = ids
    return ExpandedInstance(customers, tuple(copies), provenance, k)


def expansion_bound(instance: InstanceSpec) -> int:
    """Upper bound on the total copy count of expand_instance(instance)."""
    k = instance.fulfiller_count
    return sum(size_upper_bound(c.demand, k) for c in instance.customers)


@dataclass(frozen=True)
class SplitAssignment:
    """Per-(customer, fulfiller) amounts recovered from a non-split solution."""

    entries: dict[tuple[str, str], int]

    def amount(self, customer_id: str, fulfiller_id: str) -> int:
        return self.entries.get((customer_id, fulfiller_id), 0)

    def fulfillers_of(self, customer_id: str) -> tuple[str, ...]:
        return tuple(
            sorted(f for (c, f) in self.entries if c == customer_id)
        )

    def induced_partition(self, customer_id: str) -> Partition:
        """The customer's per-fulfiller amounts as a partition of its demand."""
        amounts = [v for (c, _), v in self.entries.items() if c == customer_id]
        if not amounts:
            raise ValueError(f"no amounts recorded for customer {customer_id!r}")
        return make_partition(amounts)


def recover_solution(
    expanded: ExpandedInstance, copy_assignment: Mapping[str, tuple[str, int]]
) -> SplitAssignment:
    """Aggregate a whole-copy assignment back to per-customer amounts.

    Every copy must be assigned to exactly one fulfiller for exactly its own
    demand; anything else is rejected. The result conserves each customer's
    demand and uses at most k distinct fulfillers per customer.
    """
    known = {c.copy_id: c for c in expanded.copies}
    for copy_id in copy_assignment:
        if copy_id not in known:
            raise ValueError(f"assignment names unknown copy {copy_id!r}")
    entries: dict[tuple[str, str], int] = {}
    for copy in expanded.copies:
        if copy.copy_id not in copy_assignment:
            raise ValueError(f"copy {copy.copy_id!r} is unassigned")
        fulfiller, amount = copy_assignment[copy.copy_id]
        _check_id(fulfiller)
        if amount != copy.demand:
            raise ValueError(
                f"copy {copy.copy_id!r} assigned amount {amount!r}, "
                f"its demand is {copy.demand}"
            )
        key = (copy.parent_id, fulfiller)
        entries[key] = entries.get(key, 0) + amount
    demands = {c.id: c.demand for c in expanded.customers}
    per_customer: dict[str, int] = {}
    fulfiller_count: dict[str, set[str]] = {}
    for (customer_id, fulfiller), amount in entries.items():
        per_customer[customer_id] = per_customer.get(customer_id, 0) + amount
        fulfiller_count.setdefault(customer_id, set()).add(fulfiller)
    for customer_id, total in per_customer.items():
        if total != demands[customer_id]:
            raise ValueError(
                f"customer {customer_id!r} recovered {total}, demand is "
                f"{demands[customer_id]}"
            )
        if len(fulfiller_count[customer_id]) > expanded.fulfiller_count:
            raise ValueError(
                f"customer {customer_id!r} served by "
                f"{len(fulfiller_count[customer_id])} fulfillers, "
                f"only {expanded.fulfiller_count} exist"
            )
    return SplitAssignment(entries)


# --- native structured format -------------------------------------------

def _customer_to_obj(customer: Customer) -> dict:
    return {"id": customer.id, "demand": customer.demand, "attrs": customer.attrs}


def _customer_from_obj(obj) -> Customer:
    if not isinstance(obj, dict):
        raise ValueError(f"customer entries must be objects, got {obj!r}")
    return Customer(
        _check_id(obj.get("id")),
        _check_demand(obj.get("demand"), minimum=0),
        dict(obj.get("attrs") or {}),
    )


def instance_to_obj(instance: InstanceSpec) -> dict:
    return {
        "k": instance.fulfiller_count,
        "customers": [
            _customer_to_obj(c)
            for c in sorted(instance.customers, key=lambda c: c.id)
        ],
    }


def instance_from_obj(obj) -> InstanceSpec:
    if not isinstance(obj, dict) or "k" not in obj or "customers" not in obj:
        raise ValueError("instance files need top-level fields 'k' and 'customers'")
    customers = tuple(_customer_from_obj(o) for o in obj["customers"])
    return InstanceSpec(customers, obj["k"])


def expanded_to_obj(expanded: ExpandedInstance) -> dict:
    return {
        "k": expanded.fulfiller_count,
        "customers": [_customer_to_obj(c) for c in expanded.customers],
        "copies": [
            {
                "copy_id": c.copy_id,
                "parent_id": c.parent_id,
                "demand": c.demand,
                "attrs": c.attrs,
            }
            for c in expanded.copies
        ],
    }


def expanded_from_obj(obj) -> ExpandedInstance:
    if not isinstance(obj, dict) or not {"k", "customers", "copies"} <= set(obj):
        raise ValueError(
            "expanded files need top-level fields 'k', 'customers' and 'copies'"
        )
    customers = tuple(_customer_from_obj(o) for o in obj["customers"])
    copies = []
    for entry in obj["copies"]:
        copies.append(
            Copy(
                _check_id(entry.get("copy_id")),
                _check_id(entry.get("parent_id")),
                _check_demand(entry.get("demand")),
                dict(entry.get("attrs") or {}),
            )
        )
    provenance: dict[str, list[str]] = {}
    for copy in copies:
        provenance.setdefault(copy.parent_id, []).append(copy.copy_id)
    expanded = ExpandedInstance(
        customers,
        tuple(copies),
        {pid: tuple(ids) for pid, ids in provenance.items()},
        obj["k"],
    )
    expanded.validate()
    return expanded


def read_instance(path) -> InstanceSpec:
    with open(path, "r", encoding="utf-8") as handle:
        return instance_from_obj(json.load(handle))


def write_instance(instance: InstanceSpec, path) -> None:
    Path(path).write_text(
        json.dumps(instance_to_obj(instance), indent=2) + "\n", encoding="utf-8"
    )


def read_expanded(path) -> ExpandedInstance:
    with open(path, "r", encoding="utf-8") as handle:
        return expanded_from_obj(json.load(handle))


def write_expanded(expanded: ExpandedInstance, path) -> None:
    Path(path).write_text(
        json.dumps(expanded_to_obj(expanded), indent=2) + "\n", encoding="utf-8"
    )


def read_copy_assignment(path) -> dict[str, tuple[str, int]]:
    """Array of {copy_id, fulfiller, amount} objects keyed by copy id."""
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, list):
        raise ValueError("assignment files must hold an array of objects")
    assignment: dict[str, tuple[str, int]] = {}
    for entry in data:
        if not isinstance(entry, dict):
            raise ValueError(f"assignment entries must be objects, got {entry!r}")
        copy_id = _check_id(entry.get("copy_id"))
        if copy_id in assignment:
            raise ValueError(f"copy {copy_id!r} assigned more than once")
        amount = entry.get("amount")
        if isinstance(amount, bool) or not isinstance(amount, int):
            raise ValueError(f"amounts must be integers, got {amount!r}")
        assignment[copy_id] = (_check_id(entry.get("fulfiller")), amount)
    return assignment


def with_passthrough(
    expanded: ExpandedInstance, extras: Sequence[Customer]
) -> ExpandedInstance:
    """Carry unexpanded rows (e.g. a depot) into the customer list."""
    merged = tuple(
        sorted(expanded.customers + tuple(extras), key=lambda c: c.id)
    )
    return replace(expanded, customers=merged)


# --- TSPLIB-style convenience reader --------------------------------------

def read_tsplib(path, fulfiller_count: int) -> tuple[Customer | None, InstanceSpec]:
    """Parse a TSPLIB-style file into the native form.

    Reads DIMENSION, NODE_COORD_SECTION (into attrs) and DEMAND_SECTION;
    CAPACITY is ignored. Node 1 with demand 0 is the depot and is returned
    separately so it can pass through expansion untouched; any other zero
    demand is rejected.
    """
    dimension = None
    coords: dict[int, dict] = {}
    demands: dict[int, int] = {}
    section = None
    with open(path, "r", encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if not line:
                continue
            upper = line.upper()
            if upper.startswith("DIMENSION"):
                dimension = int(line.split(":")[-1].strip())
                section = None
                continue
            if upper == "NODE_COORD_SECTION":
                section = "coord"
                continue
            if upper == "DEMAND_SECTION":
                section = "demand"
                continue
            if upper in ("DEPOT_SECTION", "EOF") or (":" in line and section is None):
                section = None
                continue
            if section == "coord":
                node, x, y = line.split()[:3]
                coords[int(node)] = {"x": _number(x), "y": _number(y)}
            elif section == "demand":
                node, demand = line.split()[:2]
                demands[int(node)] = int(demand)
    if dimension is None:
        raise ValueError("missing DIMENSION header")
    if set(demands) != set(range(1, dimension + 1)):
        raise ValueError("DEMAND_SECTION must cover nodes 1..DIMENSION")
    depot = None
    customers = []
    for node in range(1, dimension + 1):
        customer = Customer(str(node), demands[node], coords.get(node, {}))
        if node == 1 and customer.demand == 0:
            depot = customer
        else:
            customers.append(customer)
    return depot, InstanceSpec(tuple(customers), fulfiller_count)


def _number(text: str):
    value = float(text)
    return int(value) if value.is_integer() else value
