# Root analysis modules package
