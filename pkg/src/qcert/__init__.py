"""Exact certification engine for the Pohozaev matrices and linearized bubble systems of Q-curvature problems."""
