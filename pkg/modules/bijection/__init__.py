# Boundary bijection modules package
