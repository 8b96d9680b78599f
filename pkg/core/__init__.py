# Core package

