from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Resource caps shared by the builders and the command line.

    ``oracle_max_n`` is given for b = 2; :meth:`oracle_cap` scales it for
    larger bases, where the sets are much smaller at equal n.
    """

    max_nodes: int = 2_000_000
    distributive_nodes: int = 300
    oracle_max_n: int = 60

    def oracle_cap(self, b: int) -> int:
        return self.oracle_max_n * (b - 1)


DEFAULT_LIMITS = Limits()
