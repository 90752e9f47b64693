"""Reference values for the bundled attendance network and related data.

The women/events tables are reference outputs at 4-decimal precision.
Two cells carry notes:

* Charlotte cc2: the reference prints 0.6093 but the exact value is
  39/64 = 0.609375; both agree within 0.0001.
* Verne cc2: the reference prints 0.6188, which is inconsistent with
  the row's own driving score 0.2253; the exact value is 102/167 =
  0.6108 and reproduces that score.  Tests assert the exact value and
  the score consistency.
"""

from fractions import Fraction

# global coefficients, women side and events side
GLOBAL_PRIMARY = [0.4446, 0.6532, 0.5984, 0.5604]
GLOBAL_SECONDARY = [0.3578, 0.597, 0.8556, 0.7903]
GLOBAL_PRIMARY_EXACT = [
    Fraction(830, 1867), Fraction(2797, 4282), Fraction(839, 1402), Fraction(218, 389),
]
GLOBAL_SECONDARY_EXACT = [
    Fraction(620, 1733), Fraction(1801, 3017), Fraction(1327, 1551), Fraction(211, 267),
]

# reference ensemble intervals and their midpoints
INTERVALS_PRIMARY = [
    (0.6261, 0.6478), (0.5483, 0.5658), (0.3972, 0.4237), (0.3018, 0.3457),
]
INTERVALS_SECONDARY = [
    (0.7164, 0.7412), (0.6272, 0.65), (0.4871, 0.5209), (0.422, 0.4757),
]
MIDPOINTS_PRIMARY = [
    Fraction("0.63695"), Fraction("0.55705"), Fraction("0.41045"), Fraction("0.32375"),
]
MIDPOINTS_SECONDARY = [
    Fraction("0.7288"), Fraction("0.6386"), Fraction("0.504"), Fraction("0.44885"),
]

# per-woman coefficients as printed; Verne cc2 handled separately
WOMEN_CC_PRINTED = {
    "Evelyn": [0.3957, 0.6986, 0.6732, 0.6545],
    "Laura": [0.4468, 0.661, 0.7218, 0.7364],
    "Theresa": [0.0619, 0.7228, 0.7951, 0.6667],
    "Brenda": [0.3455, 0.656, 0.7241, 0.7565],
    "Charlotte": [1.0, 0.84, 0.6093, 0.6],
    "Frances": [0.6667, 0.684, 0.5164, 0.7742],
    "Eleanor": [0.5094, 0.662, 0.6302, 0.6234],
    "Pearl": [0.4074, 0.6931, 0.4278, 0.0652],
    "Ruth": [0.2869, 0.697, 0.6254, 0.3704],
    "Verne": [0.3778, 0.613, None, 0.3429],  # cc2 asserted exactly instead
    "Myrna": [0.6735, 0.5221, 0.504, 0.4615],
    "Katherine": [0.726, 0.569, 0.5572, 0.5254],
    "Sylvia": [0.3395, 0.6694, 0.653, 0.5444],
    "Nora": [0.7185, 0.7555, 0.4021, 0.5238],
    "Helen": [0.7143, 0.6273, 0.4703, 0.375],
    "Dorothy": [0.4667, 0.4557, 0.163, 0.0],
    "Olivia": [1.0, 0.3103, 0.0, 0.0],
    "Flora": [1.0, 0.3103, 0.0, 0.0],
}
VERNE_CC2_EXACT = Fraction(102, 167)
VERNE_CC2_PRINTED = 0.6188

WOMEN_DS = {
    "Evelyn": 0.4083, "Laura": 0.4179, "Theresa": 0.6092, "Brenda": 0.4633,
    "Charlotte": 0.0962, "Frances": 0.2626, "Eleanor": 0.3133, "Pearl": -0.0254,
    "Ruth": 0.3248, "Verne": 0.2253, "Myrna": 0.0498, "Katherine": 0.0822,
    "Sylvia": 0.3646, "Nora": 0.1247, "Helen": 0.0308, "Dorothy": -0.3793,
    "Olivia": -0.8607, "Flora": -0.8607,
}
DS_GLOBAL_PRIMARY = 0.297
INFLUENTIAL_PRIMARY = {
    "Evelyn", "Laura", "Theresa", "Brenda", "Eleanor", "Ruth", "Sylvia",
}
NEGATIVE_PRIMARY = {"Dorothy", "Olivia", "Flora", "Pearl"}

EVENT_DS = {
    "E1": -0.2659, "E2": -0.0785, "E3": 0.5281, "E4": -0.0976, "E5": 0.505,
    "E6": 0.5584, "E7": 0.374, "E8": 0.5489, "E9": 0.3727, "E10": 0.3465,
    "E11": -0.8085, "E12": 0.4019, "E13": -0.114, "E14": -0.114,
}
DS_GLOBAL_SECONDARY = 0.4756
INFLUENTIAL_SECONDARY = {"E3", "E5", "E6", "E8"}

# the 26-member meeting network: reference values usable without the data
NOORDIN_GLOBAL = [Fraction("0.0303"), Fraction("0.1108"), Fraction("0.2"), Fraction(0)]
NOORDIN_MIDPOINTS = [
    Fraction("0.18705"), Fraction("0.0609"), Fraction("0.02875"), Fraction("0.0074"),
]
NOORDIN_ROWS = {
    # name: (cc0..cc3 with None for undefined, ds)
    "Abu Dujanah": ([None, Fraction(0), Fraction("0.1667"), Fraction(0)], 0.0473),
    "Son Hadi": ([Fraction("0.1667"), Fraction(0), None, None], -0.4454),
    "Mohamed Saifuddin": ([Fraction(0), Fraction(0), None, None], 0.0),
}
NOORDIN_INFLUENTIAL_SUPERSET = {
    "Ahmad Rofiq Ridho", "Azhari Husin", "Noordin Mohammed Top", "Purnama Putra",
}
