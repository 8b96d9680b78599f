# Polytope modules package
