"""Published values of P(N, n, x) for N = 0..4, n = 0..6, as rendered text."""

P_TABLES = {
    0: [
        "0",
        "1",
        "x + 1",
        "x^2 + x + 2",
        "x^3 + x^2 + 2x + 6",
        "x^4 + x^3 + 2x^2 + 6x + 24",
        "x^5 + x^4 + 2x^3 + 6x^2 + 24x + 120",
    ],
    1: [
        "-1",
        "-x + 1",
        "-x^2 + 2x + 1",
        "-x^3 + 3x^2 + 2x + 2",
        "-x^4 + 4x^3 + 3x^2 + 4x + 6",
        "-x^5 + 5x^4 + 4x^3 + 6x^2 + 12x + 24",
        "-x^6 + 6x^5 + 5x^4 + 8x^3 + 18x^2 + 48x + 120",
    ],
    2: [
        "x - 3",
        "x^2 - 5x + 2",
        "x^3 - 7x^2 + 6x + 2",
        "x^4 - 9x^3 + 12x^2 + 6x + 4",
        "x^5 - 11x^4 + 20x^3 + 12x^2 + 12x + 12",
        "x^6 - 13x^5 + 30x^4 + 20x^3 + 24x^2 + 36x + 48",
        "x^7 - 15x^6 + 42x^5 + 30x^4 + 40x^3 + 72x^2 + 144x + 240",
    ],
    3: [
        "-x^2 + 8x - 11",
        "-x^3 + 11x^2 - 26x + 6",
        "-x^4 + 14x^3 - 47x^2 + 24x + 6",
        "-x^5 + 17x^4 - 74x^3 + 60x^2 + 24x + 12",
        "-x^6 + 20x^5 - 107x^4 + 120x^3 + 60x^2 + 48x + 36",
        "-x^7 + 23x^6 - 146x^5 + 210x^4 + 120x^3 + 120x^2 + 144x + 144",
        "-x^8 + 26x^7 - 191x^6 + 336x^5 + 210x^4 + 240x^3 + 360x^2 + 576x + 720",
    ],
    4: [
        "x^3 - 15x^2 + 58x - 50",
        "x^4 - 19x^3 + 102x^2 - 154x + 24",
        "x^5 - 23x^4 + 158x^3 - 342x^2 + 120x + 24",
        "x^6 - 27x^5 + 226x^4 - 638x^3 + 360x^2 + 120x + 48",
        "x^7 - 31x^6 + 306x^5 - 1066x^4 + 840x^3 + 360x^2 + 240x + 144",
        "x^8 - 35x^7 + 398x^6 - 1650x^5 + 1680x^4 + 840x^3 + 720x^2 + 720x + 576",
        "x^9 - 39x^8 + 502x^7 - 2414x^6 + 3024x^5 + 1680x^4 + 1680x^3 + 2160x^2 + 2880x + 2880",
    ],
}


def parse_poly(text: str):
    """Inverse of :func:`secondsol.exactcore.format_poly` for integer coefficients."""
    import re

    from .exactcore import DensePoly

    if text.strip() == "0":
        return DensePoly()
    coeffs = {}
    for sign, coef, mono, exp in re.findall(r"([+-]?)\s*(\d*)(x?)(?:\^(\d+))?", text.replace(" ", "")):
        if not coef and not mono:
            continue
        value = int(coef) if coef else 1
        e = int(exp) if exp else (1 if mono else 0)
        coeffs[e] = -value if sign == "-" else value
    return DensePoly(coeffs)
