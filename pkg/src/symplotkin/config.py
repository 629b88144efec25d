from typing import Optional

from .errors import InvalidConfigError

DEFAULT_BUDGET = 2**24


class WorkbenchOptions:
    """Represents all the options you can use to configure a
    workbench."""

    def __init__(
        self,
        budget: int = DEFAULT_BUDGET,
        w_max: Optional[int] = None,
        seed: int = 1,
        workers: int = 1,
        trials: int = 10_000,
        report_every: int = 1_000,
        hyperoval_trials: int = 2_000,
    ):
        """Constructor.

        :param budget: Largest number of projective classes an
            exhaustive distance enumeration may visit.
        :param w_max: Largest symplectic weight the bounded search
            tries. When `None` the search goes up to one below the
            claimed distance.
        :param seed: Seed of the permutation generator used by searches.
        :param workers: Number of threads used by distance kernels and
            permutation searches.
        :param trials: Largest number of permutations an LCD search
            draws.
        :param report_every: Number of trials between two progress log
            records.
        :param hyperoval_trials: Largest number of column permutations
            tried when pairing a hyperoval code with an orthogonal
            copy.
        """
        if budget < 1:
            raise InvalidConfigError(f"budget must be positive, got {budget}")
        if workers < 1:
            raise InvalidConfigError(
                f"workers must be positive, got {workers}"
            )
        if w_max is not None and w_max < 1:
            raise InvalidConfigError(f"w_max must be positive, got {w_max}")
        self.budget = budget
        self.w_max = w_max
        self.seed = seed
        self.workers = workers
        self.trials = trials
        self.report_every = report_every
        self.hyperoval_trials = hyperoval_trials
