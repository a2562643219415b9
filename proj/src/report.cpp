int betagerm_placeholder_report=0;
