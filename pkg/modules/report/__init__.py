# Report output modules package
