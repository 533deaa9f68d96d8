"""imgshield: budgeted adversarial noise that makes image manipulation models misbehave.

Protection embeds an L-inf-bounded perturbation into an image so that a
manipulation model's output on the protected input is perceptually and
semantically far from its output on the clean input. The package also
ships the evaluation harness used to score such defenses.
"""

__version__ = "0.1.0"
