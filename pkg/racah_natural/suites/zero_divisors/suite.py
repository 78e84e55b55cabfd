from racah_natural.natural import verify_zero_divisors


def run(config):
    return verify_zero_divisors(n_pairs=config.n_pairs, seed=config.seed, max_weight=config.max_weight)
