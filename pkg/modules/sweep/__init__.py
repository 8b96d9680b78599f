# Sweep modules package
