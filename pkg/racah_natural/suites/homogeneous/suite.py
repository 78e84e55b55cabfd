from racah_natural.natural import verify_homogeneous_tables


def run(config):
    return verify_homogeneous_tables(
        max_power=config.max_power, max_total=config.max_total, n_jobs=config.n_jobs, progress=config.progress
    )
