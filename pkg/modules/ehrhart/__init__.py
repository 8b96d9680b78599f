# Ehrhart polynomial modules package
