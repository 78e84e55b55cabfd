from racah_natural.usl2 import verify_pbw_laws


def run(config):
    return verify_pbw_laws(max_exponent=config.max_exponent, max_power=config.max_power)
