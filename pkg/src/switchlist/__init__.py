"""Switch-list representations of Boolean functions."""
from switchlist._backend import BACKEND
from switchlist.core import (
    Assignment,
    DimensionError,
    Op,
    OrderMismatchError,
    SizeLimitError,
    SwitchList,
    SwitchListError,
    TruthTable,
    VarOrder,
    assignment_of,
    combine,
    compile,
    count_models,
    decompile,
    equivalent,
    evaluate,
    index_of,
    is_consistent,
    is_valid,
    negate,
    reindex,
    reorder,
    size_of,
)
from switchlist.families import (
    Family,
    good_order_for,
    lower_bound,
    make_f1,
    make_f2,
    witness_sequence,
)
from switchlist.oracle import (
    OrderSearchResult,
    min_switches_over_orders,
    random_function,
    switches_under_order,
)

__version__ = "0.1.0"
