"""Wavelet filter banks embedded as frozen coefficient tables.

Ten families, each a set of four filters: analysis low/high-pass (dec_lo,
dec_hi) and synthesis low/high-pass (rec_lo, rec_hi).  The tables were
derived offline from each family's defining equations and refined until the
orthonormality / reconstruction constraints hold to ~1e-15 (see
tools/gen_filters.py at the repo root); they are validated again at test
time rather than trusted.

Biorthogonal families store all four filters zero-padded to one even length.
dmey is a 62-tap FIR approximation of the Meyer wavelet, here projected onto
exact orthonormality, so it validates to the same tolerances as the other
orthogonal families.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotOrthogonal, UnknownFamily

SQRT2 = float(np.sqrt(2.0))

_TABLES = {
    "haar": {
        "dec_lo": [
            0.7071067811865476, 0.7071067811865476,
        ],
        "dec_hi": [
            -0.7071067811865476, 0.7071067811865476,
        ],
        "rec_lo": [
            0.7071067811865476, 0.7071067811865476,
        ],
        "rec_hi": [
            0.7071067811865476, -0.7071067811865476,
        ],
    },
    "db2": {
        "dec_lo": [
            0.4829629131445342, 0.836516303737808, 0.22414386804201333, -0.12940952255126045,
        ],
        "dec_hi": [
            0.12940952255126045, 0.22414386804201333, -0.836516303737808, 0.4829629131445342,
        ],
        "rec_lo": [
            -0.12940952255126045, 0.22414386804201333, 0.836516303737808, 0.4829629131445342,
        ],
        "rec_hi": [
            0.4829629131445342, -0.836516303737808, 0.22414386804201333, 0.12940952255126045,
        ],
    },
    "db4": {
        "dec_lo": [
            0.23037781330889645, 0.7148465705529156, 0.6308807679298589, -0.02798376941685956,
            -0.18703481171909306, 0.030841381835560622, 0.03288301166688517, -0.010597401785069018,
        ],
        "dec_hi": [
            0.010597401785069018, 0.03288301166688517, -0.030841381835560622, -0.18703481171909306,
            0.02798376941685956, 0.6308807679298589, -0.7148465705529156, 0.23037781330889645,
        ],
        "rec_lo": [
            -0.010597401785069018, 0.03288301166688517, 0.030841381835560622, -0.18703481171909306,
            -0.02798376941685956, 0.6308807679298589, 0.7148465705529156, 0.23037781330889645,
        ],
        "rec_hi": [
            0.23037781330889645, -0.7148465705529156, 0.6308807679298589, 0.02798376941685956,
            -0.18703481171909306, -0.030841381835560622, 0.03288301166688517, 0.010597401785069018,
        ],
    },
    "sym8": {
        "dec_lo": [
            -0.003382415950998763, -0.0005421323318005462, 0.03169508781149559, 0.007607487325023295,
            -0.143294238351102, -0.06127335906778338, 0.4813596512589234, 0.7771857516996775,
            0.36444189483629597, -0.05194583810797862, -0.027219029917239297, 0.049137179673715024,
            0.003808752013900499, -0.014952258337074593, -0.00030292051472775904, 0.0018899503327687542,
        ],
        "dec_hi": [
            -0.0018899503327687542, -0.00030292051472775904, 0.014952258337074593, 0.003808752013900499,
            -0.049137179673715024, -0.027219029917239297, 0.05194583810797862, 0.36444189483629597,
            -0.7771857516996775, 0.4813596512589234, 0.06127335906778338, -0.143294238351102,
            -0.007607487325023295, 0.03169508781149559, 0.0005421323318005462, -0.003382415950998763,
        ],
        "rec_lo": [
            0.0018899503327687542, -0.00030292051472775904, -0.014952258337074593, 0.003808752013900499,
            0.049137179673715024, -0.027219029917239297, -0.05194583810797862, 0.36444189483629597,
            0.7771857516996775, 0.4813596512589234, -0.06127335906778338, -0.143294238351102,
            0.007607487325023295, 0.03169508781149559, -0.0005421323318005462, -0.003382415950998763,
        ],
        "rec_hi": [
            -0.003382415950998763, 0.0005421323318005462, 0.03169508781149559, -0.007607487325023295,
            -0.143294238351102, 0.06127335906778338, 0.4813596512589234, -0.7771857516996775,
            0.36444189483629597, 0.05194583810797862, -0.027219029917239297, -0.049137179673715024,
            0.003808752013900499, 0.014952258337074593, -0.00030292051472775904, -0.0018899503327687542,
        ],
    },
    "coif3": {
        "dec_lo": [
            -0.0037935128643726487, 0.007782596425659843, 0.023452696142033415, -0.06577191128138722,
            -0.061123390002887155, 0.4051769024089073, 0.7937772226260283, 0.4284834763776518,
            -0.07179982161918379, -0.08230192710650629, 0.03455502757336917, 0.015880544863747535,
            -0.00900797613677262, -0.0025745176881488132, 0.0011175187708392137, 0.00046621695982113304,
            -7.098330250635714e-05, -3.459977319766788e-05,
        ],
        "dec_hi": [
            3.459977319766788e-05, -7.098330250635714e-05, -0.00046621695982113304, 0.0011175187708392137,
            0.0025745176881488132, -0.00900797613677262, -0.015880544863747535, 0.03455502757336917,
            0.08230192710650629, -0.07179982161918379, -0.4284834763776518, 0.7937772226260283,
            -0.4051769024089073, -0.061123390002887155, 0.06577191128138722, 0.023452696142033415,
            -0.007782596425659843, -0.0037935128643726487,
        ],
        "rec_lo": [
            -3.459977319766788e-05, -7.098330250635714e-05, 0.00046621695982113304, 0.0011175187708392137,
            -0.0025745176881488132, -0.00900797613677262, 0.015880544863747535, 0.03455502757336917,
            -0.08230192710650629, -0.07179982161918379, 0.4284834763776518, 0.7937772226260283,
            0.4051769024089073, -0.061123390002887155, -0.06577191128138722, 0.023452696142033415,
            0.007782596425659843, -0.0037935128643726487,
        ],
        "rec_hi": [
            -0.0037935128643726487, -0.007782596425659843, 0.023452696142033415, 0.06577191128138722,
            -0.061123390002887155, -0.4051769024089073, 0.7937772226260283, -0.4284834763776518,
            -0.07179982161918379, 0.08230192710650629, 0.03455502757336917, -0.015880544863747535,
            -0.00900797613677262, 0.0025745176881488132, 0.0011175187708392137, -0.00046621695982113304,
            -7.098330250635714e-05, 3.459977319766788e-05,
        ],
    },
    "bior3.3": {
        "dec_lo": [
            0.06629126073623884, -0.19887378220871652, -0.1546796083845573, 0.9943689110435826,
            0.9943689110435826, -0.1546796083845573, -0.19887378220871652, 0.06629126073623884,
        ],
        "dec_hi": [
            0.0, 0.0, -0.1767766952966369, 0.5303300858899107,
            -0.5303300858899107, 0.1767766952966369, 0.0, 0.0,
        ],
        "rec_lo": [
            0.0, 0.0, 0.1767766952966369, 0.5303300858899107,
            0.5303300858899107, 0.1767766952966369, 0.0, 0.0,
        ],
        "rec_hi": [
            0.06629126073623884, 0.19887378220871652, -0.1546796083845573, -0.9943689110435826,
            0.9943689110435826, 0.1546796083845573, -0.19887378220871652, -0.06629126073623884,
        ],
    },
    "bior4.4": {
        "dec_lo": [
            0.03782845550699538, -0.02384946501938001, -0.11062440441842308, 0.3774028556126537,
            0.852698679009403, 0.3774028556126538, -0.11062440441842311, -0.02384946501938001,
            0.03782845550699538, 0.0,
        ],
        "dec_hi": [
            0.0, 0.0, -0.06453888262893848, 0.040689417609558506,
            0.41809227322221226, -0.7884856164056645, 0.41809227322221226, 0.040689417609558506,
            -0.06453888262893848, 0.0,
        ],
        "rec_lo": [
            0.0, 0.0, -0.06453888262893848, -0.040689417609558506,
            0.41809227322221226, 0.7884856164056645, 0.41809227322221226, -0.040689417609558506,
            -0.06453888262893848, 0.0,
        ],
        "rec_hi": [
            -0.03782845550699538, -0.02384946501938001, 0.11062440441842308, 0.3774028556126537,
            -0.852698679009403, 0.3774028556126538, 0.11062440441842311, -0.02384946501938001,
            -0.03782845550699538, 0.0,
        ],
    },
    "bior6.8": {
        "dec_lo": [
            0.0019088317364850263, -0.0019142861290808886, -0.016990639867607113, 0.01193456527972673,
            0.04973290349093771, -0.07726317316721133, -0.09405920349576137, 0.42079628460983887,
            0.8259229974584398, 0.420796284609839, -0.09405920349576145, -0.0772631731672113,
            0.0497329034909377, 0.01193456527972673, -0.016990639867607113, -0.0019142861290808886,
            0.0019088317364850263, 0.0,
        ],
        "dec_hi": [
            0.0, 0.0, 0.0, 0.0,
            -0.014426282505622282, 0.014467504896774137, 0.07872200106266894, -0.04036797903038226,
            -0.4178491091503204, 0.7589077294537641, -0.4178491091503204, -0.04036797903038226,
            0.07872200106266894, 0.014467504896774137, -0.014426282505622282, 0.0,
            0.0, 0.0,
        ],
        "rec_lo": [
            0.0, 0.0, 0.0, 0.0,
            0.014426282505622282, 0.014467504896774137, -0.07872200106266894, -0.04036797903038226,
            0.4178491091503204, 0.7589077294537641, 0.4178491091503204, -0.04036797903038226,
            -0.07872200106266894, 0.014467504896774137, 0.014426282505622282, 0.0,
            0.0, 0.0,
        ],
        "rec_hi": [
            0.0019088317364850263, 0.0019142861290808886, -0.016990639867607113, -0.01193456527972673,
            0.04973290349093771, 0.07726317316721133, -0.09405920349576137, -0.42079628460983887,
            0.8259229974584398, -0.420796284609839, -0.09405920349576145, 0.0772631731672113,
            0.0497329034909377, -0.01193456527972673, -0.016990639867607113, 0.0019142861290808886,
            0.0019088317364850263, 0.0,
        ],
    },
    "rbio3.3": {
        "dec_lo": [
            0.0, 0.0, 0.1767766952966369, 0.5303300858899107,
            0.5303300858899107, 0.1767766952966369, 0.0, 0.0,
        ],
        "dec_hi": [
            -0.06629126073623884, -0.19887378220871652, 0.1546796083845573, 0.9943689110435826,
            -0.9943689110435826, -0.1546796083845573, 0.19887378220871652, 0.06629126073623884,
        ],
        "rec_lo": [
            0.06629126073623884, -0.19887378220871652, -0.1546796083845573, 0.9943689110435826,
            0.9943689110435826, -0.1546796083845573, -0.19887378220871652, 0.06629126073623884,
        ],
        "rec_hi": [
            0.0, 0.0, 0.1767766952966369, -0.5303300858899107,
            0.5303300858899107, -0.1767766952966369, 0.0, 0.0,
        ],
    },
    "dmey": {
        "dec_lo": [
            -6.280237910336841e-06, 2.5218642688066104e-05, -2.6178836735495675e-05, 8.435200600213533e-05,
            -5.0238013304574906e-05, 9.220311083095123e-05, 1.9934228768825636e-05, -0.00012301828227092348,
            -9.433660350003584e-07, 0.00011407954081724602, 4.8240208027484655e-05, -0.00011640383996543857,
            -0.0002478124248677318, 0.00019246724599473937, 0.0007826349855193794, -0.0006091583402555424,
            -0.0019159934610141571, 0.0019577002932877874, 0.003947816015088533, -0.0053375441186396585,
            -0.007039090077547591, 0.012506760714143507, 0.010936528274882262, -0.026071423696372453,
            -0.014757734814301766, 0.04989342987530665, 0.018584502633956827, -0.09819039736490015,
            -0.04921589376296019, 0.419198904018062, 0.7849817567277773, 0.4191985462900518,
            -0.04921592229064611, -0.09818920652920447, 0.01858390772235776, 0.04990008938590377,
            -0.014759771153338333, -0.02606476908901644, 0.010934579882967133, 0.012514620876243422,
            -0.00703869677059308, -0.005336251906262357, 0.003947466554078931, 0.0019777918779352224,
            -0.0019178038162445804, -0.0006124063445813747, 0.0007894985328765922, 0.00013927175182500116,
            -0.0002593643521101929, -6.317298285821446e-06, 5.5204739866025706e-05, -1.777799270735136e-05,
            8.597223904387955e-06, 1.8877246323972703e-05, -1.1940131483296558e-05, -1.560547975912013e-05,
            -2.875113335419393e-05, -1.1727798792265334e-05, -2.061173041769678e-05, -5.309397959212837e-06,
            -8.601706597114149e-07, -2.14209896302887e-07,
        ],
        "dec_hi": [
            2.14209896302887e-07, -8.601706597114149e-07, 5.309397959212837e-06, -2.061173041769678e-05,
            1.1727798792265334e-05, -2.875113335419393e-05, 1.560547975912013e-05, -1.1940131483296558e-05,
            -1.8877246323972703e-05, 8.597223904387955e-06, 1.777799270735136e-05, 5.5204739866025706e-05,
            6.317298285821446e-06, -0.0002593643521101929, -0.00013927175182500116, 0.0007894985328765922,
            0.0006124063445813747, -0.0019178038162445804, -0.0019777918779352224, 0.003947466554078931,
            0.005336251906262357, -0.00703869677059308, -0.012514620876243422, 0.010934579882967133,
            0.02606476908901644, -0.014759771153338333, -0.04990008938590377, 0.01858390772235776,
            0.09818920652920447, -0.04921592229064611, -0.4191985462900518, 0.7849817567277773,
            -0.419198904018062, -0.04921589376296019, 0.09819039736490015, 0.018584502633956827,
            -0.04989342987530665, -0.014757734814301766, 0.026071423696372453, 0.010936528274882262,
            -0.012506760714143507, -0.007039090077547591, 0.0053375441186396585, 0.003947816015088533,
            -0.0019577002932877874, -0.0019159934610141571, 0.0006091583402555424, 0.0007826349855193794,
            -0.00019246724599473937, -0.0002478124248677318, 0.00011640383996543857, 4.8240208027484655e-05,
            -0.00011407954081724602, -9.433660350003584e-07, 0.00012301828227092348, 1.9934228768825636e-05,
            -9.220311083095123e-05, -5.0238013304574906e-05, -8.435200600213533e-05, -2.6178836735495675e-05,
            -2.5218642688066104e-05, -6.280237910336841e-06,
        ],
        "rec_lo": [
            -2.14209896302887e-07, -8.601706597114149e-07, -5.309397959212837e-06, -2.061173041769678e-05,
            -1.1727798792265334e-05, -2.875113335419393e-05, -1.560547975912013e-05, -1.1940131483296558e-05,
            1.8877246323972703e-05, 8.597223904387955e-06, -1.777799270735136e-05, 5.5204739866025706e-05,
            -6.317298285821446e-06, -0.0002593643521101929, 0.00013927175182500116, 0.0007894985328765922,
            -0.0006124063445813747, -0.0019178038162445804, 0.0019777918779352224, 0.003947466554078931,
            -0.005336251906262357, -0.00703869677059308, 0.012514620876243422, 0.010934579882967133,
            -0.02606476908901644, -0.014759771153338333, 0.04990008938590377, 0.01858390772235776,
            -0.09818920652920447, -0.04921592229064611, 0.4191985462900518, 0.7849817567277773,
            0.419198904018062, -0.04921589376296019, -0.09819039736490015, 0.018584502633956827,
            0.04989342987530665, -0.014757734814301766, -0.026071423696372453, 0.010936528274882262,
            0.012506760714143507, -0.007039090077547591, -0.0053375441186396585, 0.003947816015088533,
            0.0019577002932877874, -0.0019159934610141571, -0.0006091583402555424, 0.0007826349855193794,
            0.00019246724599473937, -0.0002478124248677318, -0.00011640383996543857, 4.8240208027484655e-05,
            0.00011407954081724602, -9.433660350003584e-07, -0.00012301828227092348, 1.9934228768825636e-05,
            9.220311083095123e-05, -5.0238013304574906e-05, 8.435200600213533e-05, -2.6178836735495675e-05,
            2.5218642688066104e-05, -6.280237910336841e-06,
        ],
        "rec_hi": [
            -6.280237910336841e-06, -2.5218642688066104e-05, -2.6178836735495675e-05, -8.435200600213533e-05,
            -5.0238013304574906e-05, -9.220311083095123e-05, 1.9934228768825636e-05, 0.00012301828227092348,
            -9.433660350003584e-07, -0.00011407954081724602, 4.8240208027484655e-05, 0.00011640383996543857,
            -0.0002478124248677318, -0.00019246724599473937, 0.0007826349855193794, 0.0006091583402555424,
            -0.0019159934610141571, -0.0019577002932877874, 0.003947816015088533, 0.0053375441186396585,
            -0.007039090077547591, -0.012506760714143507, 0.010936528274882262, 0.026071423696372453,
            -0.014757734814301766, -0.04989342987530665, 0.018584502633956827, 0.09819039736490015,
            -0.04921589376296019, -0.419198904018062, 0.7849817567277773, -0.4191985462900518,
            -0.04921592229064611, 0.09818920652920447, 0.01858390772235776, -0.04990008938590377,
            -0.014759771153338333, 0.02606476908901644, 0.010934579882967133, -0.012514620876243422,
            -0.00703869677059308, 0.005336251906262357, 0.003947466554078931, -0.0019777918779352224,
            -0.0019178038162445804, 0.0006124063445813747, 0.0007894985328765922, -0.00013927175182500116,
            -0.0002593643521101929, 6.317298285821446e-06, 5.5204739866025706e-05, 1.777799270735136e-05,
            8.597223904387955e-06, -1.8877246323972703e-05, -1.1940131483296558e-05, 1.560547975912013e-05,
            -2.875113335419393e-05, 1.1727798792265334e-05, -2.061173041769678e-05, 5.309397959212837e-06,
            -8.601706597114149e-07, 2.14209896302887e-07,
        ],
    },
}

FAMILIES = tuple(_TABLES)

_BIORTHOGONAL = frozenset({"bior3.3", "bior4.4", "bior6.8", "rbio3.3"})


@dataclass(frozen=True)
class FilterBank:
    """Immutable set of analysis/synthesis filters for one wavelet family."""

    family: str
    dec_lo: np.ndarray
    dec_hi: np.ndarray
    rec_lo: np.ndarray
    rec_hi: np.ndarray
    orthogonal: bool


def _frozen(values):
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


_BANKS = {
    name: FilterBank(
        family=name,
        dec_lo=_frozen(table["dec_lo"]),
        dec_hi=_frozen(table["dec_hi"]),
        rec_lo=_frozen(table["rec_lo"]),
        rec_hi=_frozen(table["rec_hi"]),
        orthogonal=name not in _BIORTHOGONAL,
    )
    for name, table in _TABLES.items()
}


def get_filter_bank(family):
    """Return the embedded FilterBank for a family id such as "haar"."""
    try:
        return _BANKS[family]
    except KeyError:
        raise UnknownFamily(
            f"unknown wavelet family {family!r}; supported: {', '.join(FAMILIES)}"
        ) from None


def derive_highpass(dec_lo):
    """Quadrature-mirror highpass h[n] = (-1)^n g[L-1-n] for an orthonormal g.

    Raises NotOrthogonal when the given lowpass does not generate an
    orthonormal system (as with the biorthogonal families' dec_lo).
    """
    g = np.asarray(dec_lo, dtype=np.float64)
    L = g.size
    if abs(np.dot(g, g) - 1.0) > 1e-8:
        raise NotOrthogonal("lowpass filter does not have unit energy")
    for k in range(1, L // 2):
        if abs(np.dot(g[: L - 2 * k], g[2 * k :])) > 1e-8:
            raise NotOrthogonal("lowpass filter is not shift-orthogonal")
    n = np.arange(L)
    return (-1.0) ** n * g[::-1]


@dataclass(frozen=True)
class ValidationReport:
    """Pass/fail findings from validate_bank; failures are reported, not raised."""

    family: str
    reconstruction_ok: bool
    max_roundtrip_error: float
    counts_ok: bool
    identities_ok: bool        # vacuously True for biorthogonal banks
    sum_lowpass_error: float
    sum_highpass_error: float
    energy_error: float

    @property
    def ok(self):
        return self.reconstruction_ok and self.counts_ok and self.identities_ok


def validate_bank(bank, tolerance=None):
    """Round-trip and identity checks for a bank; returns a ValidationReport.

    Reconstruction runs 64 random length-16 signals through one analysis +
    synthesis step; tolerance defaults to 1e-8 (1e-6 for dmey).
    """
    from .transform import dwt1d, idwt1d

    if tolerance is None:
        tolerance = 1e-6 if bank.family == "dmey" else 1e-8

    rng = np.random.default_rng(0x574156)
    worst = 0.0
    for _ in range(64):
        x = rng.standard_normal(16)
        ca, cd = dwt1d(x, bank)
        worst = max(worst, float(np.max(np.abs(idwt1d(ca, cd, bank) - x))))

    counts_ok = (
        bank.dec_lo.size == bank.dec_hi.size
        and bank.rec_lo.size == bank.rec_hi.size
    )

    sum_lo = float(abs(np.sum(bank.dec_lo) - SQRT2))
    sum_hi = float(abs(np.sum(bank.dec_hi)))
    energy = float(abs(np.dot(bank.dec_lo, bank.dec_lo) - 1.0))
    identities_ok = (not bank.orthogonal) or (
        sum_lo <= 1e-10 and sum_hi <= 1e-10 and energy <= 1e-10
    )

    return ValidationReport(
        family=bank.family,
        reconstruction_ok=worst <= tolerance,
        max_roundtrip_error=worst,
        counts_ok=counts_ok,
        identities_ok=identities_ok,
        sum_lowpass_error=sum_lo,
        sum_highpass_error=sum_hi,
        energy_error=energy,
    )
