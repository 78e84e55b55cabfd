from racah_natural.rep_oracle import oracle_check_relations, random_points


def run(config):
    points = random_points(config.n_points, seed=config.seed, height=config.height)
    return oracle_check_relations(config.dims, points, n_jobs=config.n_jobs, progress=config.progress,
                                  seed=config.seed)
