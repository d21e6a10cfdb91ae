namespace aclab {}
