"""Checkpoint rescaling between transformer sizes via 3D wavelet transforms.

Shrinking keeps the multi-level low-pass approximation of each stacked
weight module; growing synthesizes the larger module from the small one
with configurable high-frequency padding.  Both directions share one
filter-bank layer, a separable 3D transform, a grouping policy that maps
flat checkpoints to stacked modules, a binary container format, and a
training-curve metric.
"""

from .consolidate import (
    Checkpoint,
    ConsolidatedModel,
    GroupPolicy,
    GroupRule,
    consolidate,
    deconsolidate,
    infer_level_spec,
    load_policy,
)
from .container import container_bytes, read_container, write_container
from .errors import WavescaleError
from .filters import (
    FAMILIES,
    FilterBank,
    derive_highpass,
    get_filter_bank,
    validate_bank,
)
from .metrics import (
    TrainingCurve,
    first_crossing,
    flops_saving_ratio,
    load_curve_csv,
)
from .transfer import (
    DetailPadding,
    TransferOptions,
    l2s_transfer,
    make_detail_bands,
    s2l_transfer,
    transfer,
)
from .transform import dwt1d, dwt1d_multilevel, idwt1d
from .transform3d import (
    SubbandSet,
    analyze_axis,
    analyze_to_approx,
    dwt3d,
    idwt3d,
    synthesize_from_approx,
)

__version__ = "0.1.0"

__all__ = [
    "Checkpoint",
    "ConsolidatedModel",
    "DetailPadding",
    "FAMILIES",
    "FilterBank",
    "GroupPolicy",
    "GroupRule",
    "SubbandSet",
    "TrainingCurve",
    "TransferOptions",
    "WavescaleError",
    "analyze_axis",
    "analyze_to_approx",
    "consolidate",
    "container_bytes",
    "deconsolidate",
    "derive_highpass",
    "dwt1d",
    "dwt1d_multilevel",
    "dwt3d",
    "first_crossing",
    "flops_saving_ratio",
    "get_filter_bank",
    "idwt1d",
    "idwt3d",
    "infer_level_spec",
    "l2s_transfer",
    "load_curve_csv",
    "load_policy",
    "make_detail_bands",
    "read_container",
    "s2l_transfer",
    "synthesize_from_approx",
    "transfer",
    "validate_bank",
    "write_container",
    "__version__",
]
