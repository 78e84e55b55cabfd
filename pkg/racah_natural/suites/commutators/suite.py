from racah_natural.usl2 import verify_commutator_lemmas


def run(config):
    return verify_commutator_lemmas()
