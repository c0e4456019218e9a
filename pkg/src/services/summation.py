import math


class KahanSum:
    """Running compensated sum.

    Blocks of terms are first reduced with ``math.fsum`` (correctly rounded,
    independent of order) and the block results are accumulated with Kahan
    compensation in the order they arrive, so a fixed block order gives a
    bit-identical total.
    """

    def __init__(self):
        self.total = 0.0
        self.carry = 0.0

    def add(self, value):
        value = float(value) - self.carry
        new_total = self.total + value
        self.carry = (new_total - self.total) - value
        self.total = new_total
        return self

    def add_block(self, values):
        return self.add(math.fsum(values))

    @property
    def value(self):
        return self.total
