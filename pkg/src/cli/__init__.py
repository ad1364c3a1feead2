# Command-line surface of the p-group catalog tools
