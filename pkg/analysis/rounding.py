from decimal import Decimal, ROUND_HALF_UP


def round_half_up(value, places=2):
    """Round to a fixed number of decimals, halves away from zero (0.125 -> 0.13)."""
    if not isinstance(value, Decimal):
        value = Decimal(str(value))
    return float(value.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


def ratio(numerator, denominator, places=2):
    """numerator / denominator computed exactly, then rounded half-up. A zero denominator gives 0.0."""
    if not denominator:
        return 0.0
    return round_half_up(Decimal(numerator) / Decimal(denominator), places)


def percentage(part, whole, places=2):
    if not whole:
        return 0.0
    return round_half_up(Decimal(100) * Decimal(part) / Decimal(whole), places)
