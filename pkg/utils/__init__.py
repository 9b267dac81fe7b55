"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Display helpers used by reports and command output
"""

from decimal import Decimal, ROUND_HALF_UP, localcontext


def round_half_up(value, decimals):
    """Display rounding, half away from zero on the shortest decimal repr."""
    exact = Decimal(repr(float(value)))
    with localcontext() as ctx:
        # enough digits for the integer part plus every requested decimal
        ctx.prec = max(ctx.prec, exact.adjusted() + decimals + 2)
        return exact.quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_UP)


def format_number(value, decimals=3):
    if value is None:
        return ''
    rounded = round_half_up(value, decimals)
    if rounded == 0:
        rounded = abs(rounded)
    return f"{rounded:.{decimals}f}" if decimals > 0 else f"{rounded:.0f}"


def format_count(value):
    if value is None:
        return ''
    return str(int(value))


def format_flag(value):
    return 'true' if value else 'false'


def format_ratio(value, decimals=3):
    # a sample with no class represented has no ratio
    if value is None:
        return 'n/a'
    return format_number(value, decimals)
